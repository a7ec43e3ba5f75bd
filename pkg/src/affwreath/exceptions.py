# -*- coding: utf-8 -*-


class AffWreathError(Exception):
    """Base class of every error raised by affwreath."""


# scalars.py

class DivisionByZero(AffWreathError, ZeroDivisionError):
    pass


class ParseError(AffWreathError, ValueError):
    pass


# frobenius.py

class AlgebraError(AffWreathError, ValueError):
    pass


class SpecError(AlgebraError):
    pass


class NotAssociative(AlgebraError):
    pass


class NoUnit(AlgebraError):
    pass


class GradingViolation(AlgebraError):
    pass


class DegenerateTrace(AlgebraError):
    pass


class NakayamaInfiniteOrder(AlgebraError):
    pass


class NakayamaNotDiagonalizable(AlgebraError):
    pass


class AlgebraMismatch(AlgebraError):
    pass


class BadParams(AlgebraError):
    pass


class DimensionMismatch(AlgebraError):
    pass


# perms.py / tensor.py / awpa.py

class SizeMismatch(AffWreathError, ValueError):
    pass


class BadComposition(AffWreathError, ValueError):
    pass


class SlotIndexError(AffWreathError, IndexError):
    pass


class NotPolynomial(AffWreathError, ValueError):
    pass


class ZeroElement(AffWreathError, ValueError):
    pass


class BadAutomorphismParams(AffWreathError, ValueError):
    pass


# cyclotomic.py

class CycloParamsError(AffWreathError, ValueError):
    pass


class NotPsiFixed(CycloParamsError):
    pass


class WrongDegree(CycloParamsError):
    pass


class OddParity(CycloParamsError):
    pass


class LevelZero(CycloParamsError):
    pass


class ParamsMismatch(AffWreathError, ValueError):
    pass


class TooLarge(AffWreathError, ValueError):
    pass


class DegenerateGram(AffWreathError, ValueError):
    pass


# linalg.py

class SingularMatrix(AffWreathError, ValueError):
    pass
