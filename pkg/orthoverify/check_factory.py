# -*- coding: utf-8 -*-
"""
orthoverify.check_factory
~~~~~~~~~~~~~~~~~~~~~~~~~

Factory module for identity checks.

Every check class is importable from here, and ``create_check`` builds one
by its short type name.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

from .checks import FunctionCheck, IdentityCheck
from .checks.core import (
    EvenRecurrenceCheck,
    HahnWeightsCheck,
    LeadCoefficientCheck,
    OrthogonalityCheck,
    RecurrenceCheck,
    SpecialValueCheck,
)
from .checks.hahn import (
    CertificateCheck as HahnCertificateCheck,
    ConnectionCheck,
    DerivationChainCheck,
    FirstIdentityCheck,
    KernelDifferenceCheck,
    LambdaCheck,
    RnCheck,
    SecondIdentityCheck,
)
from .checks.hyp import (
    AppellReductionCheck,
    ChuVandermondeCheck,
    ContiguousCheck,
    SaalschutzCheck,
)
from .checks.kernel import (
    CertificateCheck as KernelCertificateCheck,
    KernelDiagonalCheck,
    KernelNormCheck,
    KernelPolyCheck,
    KernelSumCheck,
    LaguerreChainCheck,
    QuadraticTransformationCheck,
    SummandCheck,
    WellPoisedSeriesCheck,
)
from .checks.limit import CoherenceCheck, JacobiLimitCheck, LimitRewriteCheck
from .checks.property import PropertyCheck
from .checks.symmetric import (
    ChebyshevCheck,
    ConfluentOriginCheck,
    IntegralMethodCheck,
    ProjectionCheck,
    ProportionalityCheck,
    RecurrenceFormCheck,
)

__all__ = [
    "IdentityCheck",
    "FunctionCheck",
    "OrthogonalityCheck",
    "LeadCoefficientCheck",
    "SpecialValueCheck",
    "RecurrenceCheck",
    "EvenRecurrenceCheck",
    "HahnWeightsCheck",
    "IntegralMethodCheck",
    "ChebyshevCheck",
    "ProportionalityCheck",
    "ProjectionCheck",
    "ConfluentOriginCheck",
    "RecurrenceFormCheck",
    "KernelNormCheck",
    "KernelPolyCheck",
    "KernelDiagonalCheck",
    "KernelSumCheck",
    "WellPoisedSeriesCheck",
    "KernelCertificateCheck",
    "SummandCheck",
    "LaguerreChainCheck",
    "QuadraticTransformationCheck",
    "ConnectionCheck",
    "FirstIdentityCheck",
    "KernelDifferenceCheck",
    "DerivationChainCheck",
    "HahnCertificateCheck",
    "LambdaCheck",
    "RnCheck",
    "SecondIdentityCheck",
    "ChuVandermondeCheck",
    "SaalschutzCheck",
    "ContiguousCheck",
    "AppellReductionCheck",
    "JacobiLimitCheck",
    "LimitRewriteCheck",
    "CoherenceCheck",
    "PropertyCheck",
]

CHECK_TYPES = {
    "orthogonality": OrthogonalityCheck,
    "lead": LeadCoefficientCheck,
    "special_value": SpecialValueCheck,
    "recurrence": RecurrenceCheck,
    "even_recurrence": EvenRecurrenceCheck,
    "hahn_weights": HahnWeightsCheck,
    "integral": IntegralMethodCheck,
    "chebyshev": ChebyshevCheck,
    "cd_proportionality": ProportionalityCheck,
    "projection": ProjectionCheck,
    "confluent_origin": ConfluentOriginCheck,
    "recurrence_form": RecurrenceFormCheck,
    "kernel_norm": KernelNormCheck,
    "kernel_poly": KernelPolyCheck,
    "kernel_diagonal": KernelDiagonalCheck,
    "kernel_sum": KernelSumCheck,
    "well_poised": WellPoisedSeriesCheck,
    "kernel_certificate": KernelCertificateCheck,
    "summand": SummandCheck,
    "laguerre_f2_chain": LaguerreChainCheck,
    "quadratic_transformation": QuadraticTransformationCheck,
    "connection": ConnectionCheck,
    "first_identity": FirstIdentityCheck,
    "kernel_difference": KernelDifferenceCheck,
    "derivation_chain": DerivationChainCheck,
    "hahn_certificate": HahnCertificateCheck,
    "lambda": LambdaCheck,
    "rn": RnCheck,
    "second_identity": SecondIdentityCheck,
    "chu_vandermonde": ChuVandermondeCheck,
    "pfaff_saalschutz": SaalschutzCheck,
    "contiguous": ContiguousCheck,
    "appell_f2": AppellReductionCheck,
    "jacobi_limit": JacobiLimitCheck,
    "limit_rewrite": LimitRewriteCheck,
    "limit_coherence": CoherenceCheck,
}


def create_check(check_type, *args, **kwargs):
    """
    Factory function to create check objects by type.

    Args:
        check_type (str): Type of check to create
        *args: Arguments to pass to the check constructor
        **kwargs: Keyword arguments to pass to the check constructor

    Returns:
        IdentityCheck: The appropriate check object

    Raises:
        ValueError: If check_type is not recognized

    Examples:
        >>> check = create_check('integral', legendre, 3, 'cd_sum')
        >>> check = create_check('first_identity', HahnContext(0, 0, 5), 2, 'f87_quadext')
    """
    if check_type not in CHECK_TYPES:
        raise ValueError(
            "Unknown check type: {0}. Available types: {1}".format(
                check_type, ", ".join(sorted(CHECK_TYPES.keys()))
            )
        )

    check_class = CHECK_TYPES[check_type]
    return check_class(*args, **kwargs)
