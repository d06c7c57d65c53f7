"""Gromov-Hausdorff distance between finite subsets of the real line."""
from .bound_align import (AlignmentReport, CaseKind, StandardConfig, align_5_8, case_quantities,
                          check_double_crossing_lemma, check_wide_crossing_lemma, classify,
                          double_crossing_edges, standardize, weak_align_2)
from .core import (ATOL, Correspondence, Edge, Isometry1D, PointSet1D, apply_isometry, crossing,
                   distortion, distortion_certificate, make_point_set)
from .estimators import IsometryAligner
from .exceptions import (BoundViolation, CoverageViolation, EmptySet, GH1DError,
                         InstanceTooLarge, InvalidCoordinate, InvariantViolation, NotApplicable,
                         SeparationTooSmall)
from .gh_exact import (ApproxInterval, GHResult, Method, gh, gh_approx, gh_bruteforce,
                       gh_dp_notes, min_distortion_monotone)
from .hausdorff import (candidate_count, candidate_translations, dh_iso, directed_hausdorff,
                        hausdorff, hausdorff_profile, min_hausdorff_translation)
from .tight_family import TightInstance, generate as tight_instance, profile_table

__version__ = "0.1.0"

__all__ = [
    "ATOL", "AlignmentReport", "ApproxInterval", "BoundViolation", "CaseKind", "Correspondence",
    "CoverageViolation", "Edge", "EmptySet", "GH1DError", "GHResult", "InstanceTooLarge",
    "InvalidCoordinate", "InvariantViolation", "Isometry1D", "IsometryAligner", "Method",
    "NotApplicable", "PointSet1D", "SeparationTooSmall", "StandardConfig", "TightInstance",
    "align_5_8", "apply_isometry", "candidate_count", "candidate_translations", "case_quantities",
    "check_double_crossing_lemma", "check_wide_crossing_lemma", "classify", "crossing",
    "dh_iso", "directed_hausdorff", "distortion", "distortion_certificate",
    "double_crossing_edges", "gh", "gh_approx", "gh_bruteforce", "gh_dp_notes", "hausdorff",
    "hausdorff_profile", "make_point_set", "min_distortion_monotone",
    "min_hausdorff_translation", "profile_table", "standardize", "tight_instance",
    "weak_align_2",
]
