from enum import StrEnum


class StatementId(StrEnum):
    """
    Statements checked by the suite, in report order.
    """

    ElementPowerLemma = "ElementPowerLemma"
    LemmaKeyA = "LemmaKeyA"
    LemmaKeyB = "LemmaKeyB"
    TheoremTwoPrimes = "TheoremTwoPrimes"
    MainTheorem = "MainTheorem"
    MainTheoremDecomposition = "MainTheoremDecomposition"
    TwoComponentCharacterization = "TwoComponentCharacterization"


class OutcomeStatus(StrEnum):
    """
    Verdict of one statement on one (G, N) pair.
    """

    vacuous = "vacuous"
    holds = "holds"
    violated = "violated"
