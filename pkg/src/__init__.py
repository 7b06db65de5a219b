"""
latticeqm - дискретная квантовая механика на решётке: алгебра Вейля, многочлены
Кравчука и Мейкснера, дискретные осциллятор и радиальная задача, решёточное
уравнение Дирака
"""

__version__ = "0.1.0"
