"""Exact computations for free CR distributions.

Given a frame of complex vector fields, ``freecr`` checks the free CR axioms,
computes the structure functions and their normalization, assembles the
invariant tensor ``P`` and decides local flatness.  The homogeneous model
``su(n+1, n)`` and its Fefferman embedding live in :mod:`freecr.liealg` and
:mod:`freecr.model`.  All arithmetic is exact over the Gaussian rationals.
"""

from .crverify import CRReport, verify
from .errors import FreeCRError, ParseError
from .exactfield import Chart, GaussianRational, Scalar, parse_scalar, symbol
from .frame_io import FrameDocument, frame_document, parse_frame, serialize_frame
from .invariant import (
    assemble_P, flatness_verdict, solve_normalization, structure_functions,
)
from .report import ResultDocument, run_pipeline
from .vfields import CRFrame, VectorField, bracket, build_frame

__all__ = [
    "CRFrame", "CRReport", "Chart", "FrameDocument", "FreeCRError", "GaussianRational",
    "ParseError", "ResultDocument", "Scalar", "VectorField", "assemble_P", "bracket",
    "build_frame", "flatness_verdict", "frame_document", "parse_frame", "parse_scalar",
    "run_pipeline", "serialize_frame", "solve_normalization", "structure_functions",
    "symbol", "verify",
]
