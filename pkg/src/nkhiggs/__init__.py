"""Exact decision procedures for Higgs and co-Higgs bundles on non-Kaehler principal elliptic surfaces."""
from .errors import DomainError
from .surface import LineBundleX, SurfaceSpec, canonicalize, degree
from .invariants import H0Value, classify_range, discriminant, m_invariant
from .hopf import Mat2, normal_form_even, normal_form_odd
from .jumps import BundleDescriptor, Jump, jump_stats, reduce_jumps
from .divisors import G, W, Divisor, g2_class_reduce, h0_genus2
from .higgs import G2HiggsInput, g2_higgs_decide, smoothness_verdict

__version__ = "0.1.0"
