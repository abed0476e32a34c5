"""Command-line front end: ``fusionframes <subcommand> [flags]``.

Reports go to stdout (or ``--output``) as JSON by default. Exit codes: 0 on
success, 1 on usage errors, 2 on invalid input, 3 when a combinatorial
budget is exceeded.
"""
import argparse
import json
import sys
import time
import warnings

import numpy as np

from . import __version__
from .errors import BudgetExceededError, FusionFrameError, ValidationError
from .existence import dimension_screen, tight_exists
from .frames import (frame_report, is_normalized_pair, lower_bound_details,
                     pq_lower_majorization)
from .grassmann import DescentConfig, multi_start
from .hadamard import index_2, index_sp, minimal_index, sp_equals_minimal
from .io import basis_to_json, load_problem
from .lr import DEFAULT_BUDGET, lr_coefficient, multi_lr_coefficient
from .majorization import majorizes, submajorizes
from .polytope import build_polytope, lambda0
from .weights import WeightProblem, optimal_weights, poc_decompose

__all__ = ["main", "run", "build_parser", "to_json"]

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3
DIGITS = 12


class UsageError(Exception):
    pass


class PartialResult(Exception):
    """A budget ran out but a partial report is still worth printing."""

    def __init__(self, report):
        super().__init__(report.get("message", "budget exceeded"))
        self.report = report


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _clean(x):
    # numpy -> plain Python, floats rounded so reports are byte-stable
    if isinstance(x, dict):
        return {str(k): _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    if isinstance(x, np.ndarray):
        return _clean(x.tolist())
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        v = round(float(x), DIGITS)
        return 0.0 if v == 0 else v
    if isinstance(x, complex):
        return [_clean(x.real), _clean(x.imag)]
    return x


def to_json(report):
    return json.dumps(_clean(report), indent=2) + "\n"


def _to_text(report, prefix=""):
    lines = []
    for k, v in _clean(report).items():
        if isinstance(v, dict):
            lines.append(f"{prefix}{k}:")
            lines.extend(_to_text(v, prefix + "  ").splitlines())
        else:
            lines.append(f"{prefix}{k}: {json.dumps(v)}")
    return "\n".join(lines) + "\n"


def _floats(text, name):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ValidationError(f"--{name} must be a comma-separated list of numbers") from exc


def _ints(text, name):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ValidationError(f"--{name} must be a comma-separated list of integers") from exc


def _matrix(text):
    try:
        m = np.array(json.loads(text), dtype=float)
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise ValidationError("--matrix must be a JSON list of rows") from exc
    if m.ndim != 2:
        raise ValidationError("--matrix must be 2-dimensional")
    return m


def _pair_args(args):
    """``(n, dims, weights)`` from flags, falling back to the input file."""
    n, dims, weights = args.n, None, None
    if args.dims:
        dims = _ints(args.dims, "dims")
    if args.weights:
        weights = _floats(args.weights, "weights")
    if args.input and (n is None or dims is None or weights is None):
        prob = load_problem(args.input)
        n = prob.n if n is None else n
        dims = prob.effective_dims() if dims is None else dims
        weights = prob.weights if weights is None else weights
    if n is None or dims is None:
        raise ValidationError("need --n and --dims (or an --input file)")
    if weights is not None and len(weights) != len(dims):
        raise ValidationError(f"{len(weights)} weights for {len(dims)} dimensions")
    if any(d < 1 or d > n for d in dims):
        raise ValidationError(f"dimensions must lie in 1..{n}")
    return n, dims, weights


def _require_input(args):
    if not args.input:
        raise ValidationError("this subcommand needs --input <problem.json>")
    return load_problem(args.input)


def cmd_potential(args):
    prob = _require_input(args)
    fam = prob.family()
    tol = args.tol if args.tol is not None else 1e-6
    rep = frame_report(fam, tol)
    out = {"ffp": rep.ffp, "tight": rep.tight, "frame": rep.frame,
           "trace": rep.trace, "spectrum": rep.spectrum, "tol": tol}
    if rep.trace >= 1 - 1e-10:
        pq = pq_lower_majorization(fam)
        out["pq_submajorized"] = pq.submajorized
        out["pq_majorized"] = pq.majorized
    if is_normalized_pair(fam.n, fam.dims, fam.weights):
        lb = lower_bound_details(fam.n, fam.dims, fam.weights)
        out["lower_bound"] = {"value": lb.value, "j0": lb.j0, "c": lb.c}
    return out


def cmd_tight_check(args):
    prob = _require_input(args)
    fam = prob.family()
    tol = args.tol if args.tol is not None else 1e-6
    rep = frame_report(fam, tol)
    dev = float(np.linalg.norm(rep.frame_operator - rep.trace / fam.n * np.eye(fam.n), 2))
    return {"tight": rep.tight, "bound": rep.trace / fam.n, "deviation": dev, "tol": tol}


def cmd_exists_tff(args):
    n, dims, weights = _pair_args(args)
    if weights is None:
        raise ValidationError("exists-tff needs --weights")
    verdict = tight_exists(n, dims, weights, budget=args.budget)
    screen = dimension_screen(n, dims, weights)
    report = {
        "exists": verdict.exists,
        "violation": verdict.violation.as_dict() if verdict.violation else None,
        "screen": [{"kind": f.kind, "indices": [i + 1 for i in f.indices], "message": f.message}
                   for f in screen],
        "screen_notes": verdict.screen_notes,
        "inequalities_checked": verdict.checked,
        "orders_checked": list(verdict.orders_checked),
        "message": verdict.message,
        "tol": 1e-12,
    }
    if verdict.exists is None:
        raise PartialResult(report)
    return report


def cmd_minimize(args):
    n, dims, weights = _pair_args(args)
    if weights is None and not args.free_weights:
        raise ValidationError("minimize needs --weights unless --free-weights is given")
    cfg = DescentConfig(max_iters=args.max_iter,
                        grad_tol=args.tol if args.tol is not None else 1e-9,
                        restarts=args.restarts, seed=args.seed)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        ms = multi_start(n, dims, weights, cfg, free_weights=args.free_weights)
    best = ms.best
    st = best.structure
    return {
        "ffp": best.ffp,
        "spectrum": best.spectrum,
        "converged": best.converged,
        "grad_norm": best.grad_norm,
        "weights": best.family.weights,
        "best_restart": best.restart_index,
        "restarts": [{"restart": r.restart_index, "ffp": r.ffp, "iterations": r.iterations,
                      "converged": r.converged} for r in ms.results],
        "spectra_agree": ms.spectra_agree,
        "max_spectrum_spread": ms.max_spectrum_spread,
        "structure": {
            "clusters": [{"value": v, "multiplicity": k} for v, k in st.eigenvalue_clusters],
            "commutation_residual": st.commutation_residual,
            "eigenspace_tightness": st.eigenspace_tightness,
            "invertible": st.invertible,
            "min_eigenvalue": st.min_eigenvalue,
            "cluster_tol": st.cluster_tol,
        },
        "family": {"n": n, "subspaces": [{"basis": basis_to_json(u)} for u in best.family.bases],
                   "weights": best.family.weights},
        "config": {"seed": cfg.seed, "grad_tol": cfg.grad_tol, "max_iters": cfg.max_iters,
                   "restarts": cfg.restarts, "free_weights": args.free_weights},
    }


def cmd_lambda0(args):
    n, dims, weights = _pair_args(args)
    if weights is None:
        raise ValidationError("lambda0 needs --weights")
    poly = build_polytope(n, dims, weights, budget=args.budget)
    res = lambda0(poly)
    return {"lambda0": res.lambda0, "value": res.value,
            "active_constraints": res.active_constraints,
            "constraints": len(poly.constraints), "kkt_residual": res.kkt_residual,
            "max_violation": res.max_violation, "dykstra_gap": res.dykstra_gap,
            "tol": 1e-9}


def cmd_weights(args):
    prob = _require_input(args)
    wp = WeightProblem(prob.subspaces)
    tol = args.tol if args.tol is not None else 1e-6
    ow = optimal_weights(wp, fast=args.fast, tol=tol)
    out = {"value": ow.value, "z": ow.z_star, "a": ow.a_star,
           "support": [i + 1 for i in ow.support],
           "all_supports": [[i + 1 for i in s] for s in ow.all_supports],
           "kernel_dim": ow.kernel_dim, "frame": ow.frame_preserving,
           "frame_criterion": ow.frame_criterion, "min_eigenvalue": ow.min_eigenvalue,
           "exact": ow.exact, "borderline": ow.borderline, "tol": tol}
    if args.poc:
        dec = poc_decompose(wp, fast=args.fast)
        out["poc"] = {"components": [[i + 1 for i in c] for c in dec.components],
                      "gamma": dec.gamma, "value": dec.value}
    return out


def cmd_hadamard_index(args):
    if args.matrix:
        g = _matrix(args.matrix)
    elif args.input:
        try:
            with open(args.input, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ValidationError(f"cannot read matrix from {args.input}: {exc}") from exc
        if not isinstance(data, dict) or "matrix" not in data:
            raise ValidationError("matrix file must be an object with a 'matrix' field")
        g = _matrix(json.dumps(data["matrix"]))
    else:
        raise ValidationError("hadamard-index needs --matrix or --input")
    out = {}
    kinds = ["minimal", "sp", "2"] if args.kind == "all" else [args.kind]
    for kind in kinds:
        if kind == "minimal":
            r = minimal_index(g)
            out["minimal"] = {"value": r.value, "method": r.method, "det_formula": r.cross_check}
        elif kind == "sp":
            r = index_sp(g)
            ok, u = sp_equals_minimal(g)
            out["sp"] = {"value": r.value, "witness": r.witness, "method": r.method,
                         "support": [i + 1 for i in r.support], "exact": r.exact,
                         "equals_minimal": ok, "u": u}
        else:
            r = index_2(g)
            out["2"] = {"value": r.value, "witness": r.witness, "method": r.method}
    out["tol"] = 1e-9
    return out


def _partition(text):
    return tuple(_ints(text, "partition")) if text.strip() else ()


def cmd_lr_coeff(args):
    lam = _partition(args.lam)
    if args.factors is not None:
        factors = [_partition(f) for f in args.factors.split(";")]
        return {"lambda": lam, "factors": factors,
                "coefficient": multi_lr_coefficient(lam, factors)}
    if args.mu is None or args.nu is None:
        raise ValidationError("lr-coeff needs --mu and --nu, or --factors")
    mu, nu = _partition(args.mu), _partition(args.nu)
    return {"lambda": lam, "mu": mu, "nu": nu, "coefficient": lr_coefficient(lam, mu, nu)}


def cmd_majorize(args):
    x, y = _floats(args.x, "x"), _floats(args.y, "y")
    tol = args.tol if args.tol is not None else 1e-10
    return {"x_submajorized_by_y": submajorizes(y, x, tol),
            "x_majorized_by_y": majorizes(y, x, tol), "tol": tol}


COMMANDS = {
    "potential": (cmd_potential, "potential, spectrum and tightness of a family"),
    "tight-check": (cmd_tight_check, "is the frame operator a multiple of I?"),
    "exists-tff": (cmd_exists_tff, "decide existence of a tight family for (n, d, w)"),
    "minimize": (cmd_minimize, "minimize the potential by Grassmannian descent"),
    "lambda0": (cmd_lambda0, "least-norm feasible spectrum"),
    "weights": (cmd_weights, "optimal weights for fixed subspaces"),
    "hadamard-index": (cmd_hadamard_index, "Hadamard indexes of a PSD matrix"),
    "lr-coeff": (cmd_lr_coeff, "Littlewood-Richardson coefficients"),
    "majorize": (cmd_majorize, "(sub)majorization between two vectors"),
}


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--input", default=None)
    common.add_argument("--output", default=None)

    parser = _Parser(prog="fusionframes", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    parsers = {name: sub.add_parser(name, parents=[common], help=text)
               for name, (_, text) in COMMANDS.items()}
    for name in ("exists-tff", "minimize", "lambda0"):
        p = parsers[name]
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--dims", default=None, help="comma-separated, e.g. 2,2")
        p.add_argument("--weights", default=None, help="comma-separated, e.g. 0.5,0.5")
    p = parsers["minimize"]
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--max-iter", type=int, default=100000)
    p.add_argument("--free-weights", action="store_true")
    p = parsers["weights"]
    p.add_argument("--fast", action="store_true", help="stop at the first optimal support")
    p.add_argument("--poc", action="store_true", help="also report the orthogonal components")
    p = parsers["hadamard-index"]
    p.add_argument("--matrix", default=None, help="JSON rows, e.g. [[1,0],[0,1]]")
    p.add_argument("--kind", choices=["minimal", "sp", "2", "all"], default="all")
    p = parsers["lr-coeff"]
    p.add_argument("--lam", required=True, help="comma-separated parts")
    p.add_argument("--mu", default=None)
    p.add_argument("--nu", default=None)
    p.add_argument("--factors", default=None, help="semicolon-separated partitions")
    p = parsers["majorize"]
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    return parser


def run(argv=None, stdout=None, stderr=None):
    """Parse ``argv``, run the subcommand and write the report. Returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    if args.command is None:
        stderr.write(parser.format_usage())
        return EXIT_USAGE
    func = COMMANDS[args.command][0]
    start = time.perf_counter()
    try:
        report = func(args)
    except PartialResult as exc:
        report, code = exc.report, EXIT_BUDGET
    except BudgetExceededError as exc:
        report, code = {"error": "budget", "message": str(exc), "required": exc.required,
                        "budget": exc.budget}, EXIT_BUDGET
    except (ValidationError, FusionFrameError, ValueError) as exc:
        report, code = {"error": "invalid input", "message": str(exc)}, EXIT_INVALID
    else:
        code = EXIT_OK
    report = {"subcommand": args.command, **report,
              "timing": round(time.perf_counter() - start, 6)}
    text = to_json(report) if args.format == "json" else _to_text(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    if code != EXIT_OK:
        stderr.write(f"error: {report['message']}\n")
    return code


def main(argv=None):
    sys.exit(run(argv))
