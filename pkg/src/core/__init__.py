"""
Численное ядро: операторы, семейства многочленов, наборы проверок и отчёты
"""
