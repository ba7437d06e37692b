"""
Hierarquia de erros do domínio.

Todos herdam de ValueError: são erros de dados, não falhas internas.
"""


class BivalentError(ValueError):
    """Erro base do modelo de sequências bivalentes."""


class EmptyInput(BivalentError):
    """Entrada vazia onde ao menos um elemento é exigido."""


class InvalidDigit(BivalentError):
    """Dígito binário fora de {0, 1} ou elemento fora de {+1, -1}."""


class LengthNotAligned(BivalentError):
    """Comprimento da sequência incompatível com o operador solicitado."""

    def __init__(self, length: int, block: int):
        self.length = length
        self.block = block
        super().__init__(
            f"Comprimento {length} não é múltiplo de {block}"
        )


class NonDyadicExponent(BivalentError):
    """Expoente que não é um racional diádico k/2^n."""


class SequenceTooShort(BivalentError):
    """Sequência menor que a janela de comparação."""

    def __init__(self, length: int, window: int):
        self.length = length
        self.window = window
        super().__init__(
            f"Sequência de comprimento {length} é menor que a janela de {window} bits"
        )


class InvalidWavenumber(BivalentError):
    """Número de onda não positivo."""


class UnnormalizedState(BivalentError):
    """Vetor de estado com norma diferente de 1."""


class SequenceFormatError(BivalentError):
    """Arquivo BSQ1 malformado."""


class InvalidSeed(BivalentError):
    """Semente fora do intervalo de 64 bits sem sinal."""
