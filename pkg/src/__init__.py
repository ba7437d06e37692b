"""
Modelo de sequências bivalentes para sistemas quânticos de dois estados.
"""

__version__ = "1.0.0"
__author__ = "Equipe de Desenvolvimento"
__description__ = (
    "Operadores autossimilares i^q, operador de latitude j_θ, critério "
    "determinístico de medição e experimentos de Monte Carlo"
)
