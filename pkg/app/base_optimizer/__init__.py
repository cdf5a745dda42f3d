"""閉包系統基底最佳化 (base_optimizer) 套件。

以蘊涵基底表示有限閉包系統，提供閉包運算、閉集格分析、擬閉超圖、
凸幾何基底的最佳化與驗證、四類凸幾何的產生與辨識，以及暴力參考實作。
"""
