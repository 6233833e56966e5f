"""``freecr`` command line.

Exit status: 0 on success, 1 when a verification fails or a frame is
rejected, 2 on unreadable or malformed input.
"""

import argparse
import random
import sys

from . import liealg
from .errors import FreeCRError, ParseError
from .frame_io import frame_document, parse_frame, serialize_frame
from .model import adapted, fefferman, harmonic, quadric
from .model.frames import deformed_frame, flat_frame
from .report import ResultDocument, check_document, run_pipeline

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(doc, fmt):
    sys.stdout.write(doc.to_json() if fmt == "json" else doc.to_text())


def _load(args):
    try:
        text = _read(args.frame)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return None
    try:
        return parse_frame(text)
    except ParseError as e:
        print(f"error: {args.frame}: {e}", file=sys.stderr)
        return None


def cmd_check(args):
    doc = _load(args)
    if doc is None:
        return EXIT_INPUT
    result, ok = check_document(doc)
    _emit(result, args.format)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_invariant(args):
    doc = _load(args)
    if doc is None:
        return EXIT_INPUT
    result = run_pipeline(doc)
    _emit(result, args.format)
    return EXIT_FAIL if result.verdict == "rejected" else EXIT_OK


def cmd_model_flat(args):
    try:
        fields = deformed_frame(args.n) if args.deform else flat_frame(args.n)
    except FreeCRError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(serialize_frame(frame_document(fields)))
    return EXIT_OK


class _Suite:
    """Collects named checks into a result document."""

    def __init__(self, command, n):
        self.data = {"command": command, "n": n, "checks": []}
        self.ok = True

    def record(self, name, passed, detail=""):
        self.ok &= bool(passed)
        row = {"check": name, "passed": bool(passed)}
        if detail:
            row["detail"] = detail
        self.data["checks"].append(row)

    def finish(self):
        self.data["verdict"] = "passed" if self.ok else "failed"
        return ResultDocument(self.data)


def _failures(bad):
    return f"{len(bad)} failures, first {bad[0]}" if bad else ""


def cmd_algebra_verify(args):
    n = args.n
    rng = random.Random(args.seed)
    alg = liealg.Algebra(n)
    s = _Suite("algebra verify", n)
    s.data["grade_dimensions"] = {str(g): d for g, d in sorted(alg.grade_dimensions().items())}
    bad = liealg.check_grading(alg)
    s.record("grading [g_i, g_j] in g_(i+j)", not bad, _failures(bad))
    if n == 2 and not args.random_triples:
        triples = None
        label = "Jacobi, all basis triples"
    else:
        d = alg.dimension
        triples = [tuple(rng.randrange(d) for _ in range(3)) for _ in range(args.random_triples or 300)]
        label = f"Jacobi, {len(triples)} random basis triples"
    bad = liealg.check_jacobi(alg, triples)
    s.record(label, not bad, _failures(bad))
    bad = liealg.check_minus_one_bracket(alg)
    s.record("g_-1 bracket equals X*Y - Y*X", not bad, _failures(bad))
    s.record("g_1 x g_-1 trace pairing nondegenerate", liealg.pairing_nondegenerate(alg))
    fam, trivial = liealg.centre_check(alg)
    s.record("no g_0 block scalar acts trivially on g_-", trivial == 0, f"family {fam}, trivial {trivial}")
    rec = liealg.rigidity_check(n)
    s.record("Levi-form symmetry kernel is span{Id, J}", rec.kernel_dimension == 2 and rec.spans_id_and_J,
             f"real dimension {rec.kernel_dimension}")
    s.record("complex structures in the kernel are +-J", len(rec.complex_structures) == 2)
    if n >= 3:
        closed, k11, nonzero = harmonic.harmonicity_check(n, harmonic.sample_tensor(n))
        s.record("trace-free sample is codifferential-closed", closed and k11 and nonzero)
    closed, _, _ = harmonic.harmonicity_check(n, harmonic.trace_sample(n))
    s.record("non-trace-free sample is not codifferential-closed", not closed)
    _emit(s.finish(), args.format)
    return EXIT_OK if s.ok else EXIT_FAIL


def cmd_fefferman_verify(args):
    n = args.n
    s = _Suite("fefferman verify", n)
    emb = fefferman.embedding(n)
    s.data["scaling_squared"] = " ".join(str(x) for x in emb.scaling_squared)
    bad = fefferman.check_homomorphism(n)
    s.record("[e(x), e(y)] = e([x, y]) on basis pairs", not bad, _failures(bad))
    bad = fefferman.check_image_relations(n)
    s.record("images preserve the target form", not bad, _failures(bad))
    s.record("embedding injective", fefferman.check_injective(n))
    s.data["grade_map"] = {str(g): v for g, v in fefferman.grade_map(n).items()}
    _emit(s.finish(), args.format)
    return EXIT_OK if s.ok else EXIT_FAIL


def cmd_model_verify(args):
    n = args.n
    rng = random.Random(args.seed)
    s = _Suite("model verify", n)
    for which in ("g1", "g2"):
        cert = quadric.quadric_action_check(n, which)
        s.record(f"exp {which} preserves the quadric", cert.ok,
                 f"congruence={cert.congruence}, reduces={cert.reduces_to_zero}, "
                 f"denominator={cert.denominator_nonzero}")
    bad = []
    for k in range(args.planes):
        ab = adapted.adapted_basis(adapted.random_plane(n, rng))
        if adapted.gram_conditions(n, ab):
            bad.append(k)
    s.record(f"adapted basis on {args.planes} random planes", not bad, _failures(bad))
    _emit(s.finish(), args.format)
    return EXIT_OK if s.ok else EXIT_FAIL


def _positive(text):
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("n must be at least 2")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="result document format (default: text)")
    p = argparse.ArgumentParser(prog="freecr", description="Free CR distributions: checks, invariants, model.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="CR checks on a frame file")
    c.add_argument("frame", help="frame file, or - for stdin")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("invariant", parents=[common], help="structure functions, normalization, P and verdict")
    c.add_argument("frame", help="frame file, or - for stdin")
    c.set_defaults(func=cmd_invariant)

    m = sub.add_parser("model", help="homogeneous model").add_subparsers(dest="action", required=True)
    c = m.add_parser("flat", help="print the flat (or deformed) frame file")
    c.add_argument("--n", type=_positive, required=True)
    c.add_argument("--deform", action="store_true", help="deformed example (n >= 4)")
    c.set_defaults(func=cmd_model_flat)
    c = m.add_parser("verify", parents=[common], help="quadric action and adapted bases")
    c.add_argument("--n", type=_positive, required=True)
    c.add_argument("--planes", type=int, default=20)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_model_verify)

    a = sub.add_parser("algebra", help="graded su(n+1, n)").add_subparsers(dest="action", required=True)
    c = a.add_parser("verify", parents=[common])
    c.add_argument("--n", type=_positive, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--random-triples", type=int, default=0, help="sample Jacobi triples (default: all at n=2)")
    c.set_defaults(func=cmd_algebra_verify)

    f = sub.add_parser("fefferman", help="embedding into su(n+1, n+1)").add_subparsers(dest="action", required=True)
    c = f.add_parser("verify", parents=[common])
    c.add_argument("--n", type=_positive, required=True)
    c.set_defaults(func=cmd_fefferman_verify)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
