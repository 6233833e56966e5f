"""Homogeneous model: example frames, quadric action, adapted bases, Fefferman."""

from ..liealg import kappa11_project
from .adapted import AdaptedBasis, IsotropicPlane, adapted_basis, gram_conditions, random_plane, standard_plane
from .fefferman import FeffermanEmbedding, embedding, fefferman_embed
from .frames import deformed_frame, flat_frame
from .harmonic import harmonicity_check, p_cochain
from .quadric import QuadricCertificate, quadric_action_check

__all__ = [
    "AdaptedBasis", "FeffermanEmbedding", "IsotropicPlane", "QuadricCertificate", "adapted_basis",
    "deformed_frame", "embedding", "fefferman_embed", "flat_frame", "gram_conditions",
    "harmonicity_check", "kappa11_project", "p_cochain", "quadric_action_check", "random_plane",
    "standard_plane",
]
