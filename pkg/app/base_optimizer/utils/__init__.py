"""閉包系統最佳化套件的共用工具程式模組。

此模組包含位元遮罩運算、主控台日誌，以及三種文字檔格式的解析與輸出。
"""
