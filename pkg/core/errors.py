# -*- coding: utf-8 -*-
"""
core/errors.py
Hierarquia de exceções do toolkit.

Todas herdam de MopError para o CLI poder apanhar erros de domínio
num só sítio e devolver exit code 2.
"""


class MopError(Exception):
    """Erro base de todas as operações sobre MOPs"""


# ============================================================================
# VALIDAÇÃO DE GRAFOS
# ============================================================================

class TooSmall(MopError):
    """Ordem demasiado pequena para a operação pedida"""


class WrongChordCount(MopError):
    """Número de cordas diferente de n-3"""


class CrossingChords(MopError):
    """Duas cordas cruzam-se no interior do polígono"""


class DuplicateChord(MopError):
    """A mesma corda aparece mais do que uma vez"""


class DegenerateChord(MopError):
    """Laço, aresta exterior ou extremo fora de 0..n-1"""


class GraphFormatError(MopError):
    """Ficheiro de grafo mal formado (mensagem com fonte:linha:coluna)"""


# ============================================================================
# CIRURGIA ESTRUTURAL
# ============================================================================

class NotAChord(MopError):
    """O par dado não é uma corda do grafo"""


class NotAnEdge(MopError):
    """O par dado não é aresta do grafo"""


class NotOuterEdge(MopError):
    """O par dado não é uma aresta do ciclo exterior"""


class ResultNotMop(MopError):
    """A remoção de vértices não deixou um MOP"""


class NoTriangleOnSide(MopError):
    """Não existe triângulo do lado pedido (lado ilimitado de aresta exterior)"""


# ============================================================================
# SOLVER EXATO
# ============================================================================

class TooLarge(MopError):
    """Instância acima do limite do solver/enumeração"""


class ParameterOutOfRange(MopError):
    """Parâmetros de família ou de comando fora do intervalo válido"""


# ============================================================================
# FAMÍLIAS EXCECIONAIS
# ============================================================================

class NotAMarkedPair(MopError):
    """(G, xy) não satisfaz ℓ par >= 4 e {d(x), d(y)} = {2, 3}"""


class UOnCycle(MopError):
    """O vértice âncora pertence ao ciclo interior C_0"""


class BadPieceCount(MopError):
    """Número de peças não é 2p+1 com 1 <= p <= k-1"""


class SumTooSmall(MopError):
    """Soma dos ℓ_i abaixo de 4kp+2p+2"""


class PieceOutOfRange(MopError):
    """Peça com ℓ ímpar, fora de [4, 2k] ou fora de 𝒢_ℓ"""


class BadTriangulation(MopError):
    """Triangulação interior inválida para o polígono de 2p+1 vértices"""


# ============================================================================
# CONSTRUÇÕES
# ============================================================================

class WrongOrder(MopError):
    """Ordem do grafo incompatível com a construção"""


class DegreeTooSmall(MopError):
    """Condição de grau mínimo da construção não satisfeita"""


class IsExceptional(MopError):
    """O grafo pertence a ℋ_k"""


class OrderTooSmall(MopError):
    """n < 2k+1"""


class InternalInvariantViolation(MopError):
    """Uma garantia de um ramo da construção falhou (bug de implementação)"""
