"""閉包系統的演算法模組。

- closure：前向鏈結、等價、σ 與擬閉 / 偽閉判定
- lattice：閉集格列舉、極點、本質集、凸幾何判定
- hypergraph：擬閉超圖與 hitting set
- optimizer：最小化、左右化簡、標準基底、最佳性證明
- posets / affine / recognition：凸幾何類別的產生與辨識
- oracle：暴力參考實作
"""
