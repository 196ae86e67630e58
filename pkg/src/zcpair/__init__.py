"""Construction and exact verification of q-ary Z-complementary pairs (ZCPs)
and 2-D Z-complementary array pairs (ZCAPs)."""

from .algebra import CycSum, IntPoly, cyclotomic_poly
from .arrays import (RootArray, ZcapCertificate, ZczFrontier, accf2d, aacf2d,
                     lift2d, max_zcz_rect, surface, zcap_check)
from .constructions import (Theorem2Params, corollary1_combine,
                            lemma5_construct, lemma5_default_permutation,
                            lemma6_base, theorem1_combine, theorem2_direct,
                            theorem2_gbf)
from .gbf import (Gbf, Gbf2D, ZqVector, Zq2DArray, bits_msb, gbf2d_to_array,
                  gbf_to_sequence, gdj_pair, parse_anf)
from .sequences import (RootVector, VerificationError, ZcpCertificate, accf,
                        aacf, lemma4_extend, lift, mate_check, mate_of,
                        max_zcz, transform)

__all__ = [
    "CycSum", "IntPoly", "cyclotomic_poly",
    "RootArray", "ZcapCertificate", "ZczFrontier", "accf2d", "aacf2d",
    "lift2d", "max_zcz_rect", "surface", "zcap_check",
    "Theorem2Params", "corollary1_combine", "lemma5_construct",
    "lemma5_default_permutation", "lemma6_base", "theorem1_combine",
    "theorem2_direct", "theorem2_gbf",
    "Gbf", "Gbf2D", "ZqVector", "Zq2DArray", "bits_msb", "gbf2d_to_array",
    "gbf_to_sequence", "gdj_pair", "parse_anf",
    "RootVector", "VerificationError", "ZcpCertificate", "accf", "aacf",
    "lemma4_extend", "lift", "mate_check", "mate_of", "max_zcz", "transform",
]

__version__ = "0.1.0"
