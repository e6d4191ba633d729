"""Command-line front end: object listings, Hall tables, verification suites
and SDH structure constants, all as JSON.

Exit codes: 0 all suites pass, 1 an identity is violated, 2 a computation
was aborted (truncation or enumeration budget), 3 bad configuration.
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Callable

import click

from .backends import CategoryBackend, ConfigError, Iso, QuiverSpec, k0_add, k0_le, make_backend
from .double import DrinfeldDouble
from .finfield import SUPPORTED_PRIMES
from .hallcore import HallAlgebra
from .report import Report, TruncationError
from .reps import BudgetError
from .sdh import SDHAlgebra, SDHKey, _terms, sensitivity_controls

SCHEMA_VERSION = 1

EXIT_OK, EXIT_VIOLATION, EXIT_ABORT, EXIT_CONFIG = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    backend: str
    q: int
    bound: tuple[int, ...]
    quiver: QuiverSpec | None = None
    suites: tuple[str, ...] = ()
    inject_fault: bool = False

    def to_json(self) -> dict:
        return {
            "backend": self.backend,
            "q": self.q,
            "bound": list(self.bound),
            "quiver": self.quiver.to_json() if self.quiver else None,
            "suites": list(self.suites),
            "inject_fault": self.inject_fault,
        }

    @classmethod
    def build(cls, backend: str, q: int | None, bound: str | None, quiver_file: str | None, **kw) -> RunConfig:
        quiver = None
        file_q = None
        if backend == "quiver":
            if not quiver_file:
                raise ConfigError("--backend quiver needs --quiver FILE")
            try:
                quiver, file_q = QuiverSpec.load(quiver_file)
            except (OSError, json.JSONDecodeError) as exc:
                raise ConfigError(f"cannot read quiver file: {exc}") from exc
        elif quiver_file:
            raise ConfigError("--quiver only applies to --backend quiver")
        q = q if q is not None else (file_q if file_q is not None else 2)
        if q not in SUPPORTED_PRIMES:
            raise ConfigError(f"q must be one of {SUPPORTED_PRIMES}, got {q}")
        rank = quiver.vertices if quiver else 1
        if bound is None:
            parsed = (2,) if quiver is None else (1,) * rank
        else:
            try:
                parsed = tuple(int(x) for x in bound.split(","))
            except ValueError as exc:
                raise ConfigError(f"bad bound {bound!r}") from exc
        if len(parsed) != rank or any(x < 0 for x in parsed):
            raise ConfigError(f"bound must be {rank} non-negative integers, got {bound!r}")
        return cls(backend, q, parsed, quiver, **kw)


@dataclass
class Context:
    """Lazily built algebras shared by the suites of one run."""

    config: RunConfig
    cache: dict = field(default_factory=dict)

    @cached_property
    def backend(self) -> CategoryBackend:
        return make_backend(self.config.backend, self.config.q, self.config.quiver)

    @cached_property
    def hall(self) -> HallAlgebra:
        hall = HallAlgebra(self.backend)
        if self.config.inject_fault:
            corrupt(hall, self.config.bound)
        return hall

    @cached_property
    def sdh(self) -> SDHAlgebra:
        return SDHAlgebra(self.backend)

    @cached_property
    def double(self) -> DrinfeldDouble:
        return DrinfeldDouble(self.sdh)


def corrupt(hall: HallAlgebra, bound) -> tuple | None:
    """Test mode: bump the first nontrivial Hall number within bound by one."""
    objs = hall.backend.objects_up_to(bound)
    for m in objs:
        for n in objs:
            if not any(m.dim) or not any(n.dim) or not k0_le(k0_add(m.dim, n.dim), bound):
                continue
            for r in hall.objects_of_class(k0_add(m.dim, n.dim)):
                h = hall.h(m, n, r)
                if h:
                    hall.overrides[(m, n, r)] = h + 1
                    return m, n, r
    return None


# suite registry --------------------------------------------------------------------------

SuiteFn = Callable[[Context], list[Report]]
SUITES: dict[str, SuiteFn] = {}
DEFAULT_SUITES: list[str] = []


def suite(name: str, default: bool = True):
    def register(fn: SuiteFn) -> SuiteFn:
        SUITES[name] = fn
        if default:
            DEFAULT_SUITES.append(name)
        return fn

    return register


@suite("double-entry")
def _double_entry(ctx: Context) -> list[Report]:
    return [ctx.hall.verify_double_entry(ctx.config.bound)]


@suite("associativity")
def _associativity(ctx: Context) -> list[Report]:
    return [ctx.hall.verify_associativity(ctx.config.bound)]


@suite("green")
def _green(ctx: Context) -> list[Report]:
    b = ctx.config.bound
    return [ctx.hall.verify_green_formula(b), ctx.hall.verify_green_corollary(b)]


@suite("hall-bialgebra")
def _hall_bialgebra(ctx: Context) -> list[Report]:
    b = ctx.config.bound
    h = ctx.hall
    return [h.verify_coassociativity(b), h.verify_counit(b), h.verify_bialgebra(b)]


@suite("normal-forms")
def _normal_forms(ctx: Context) -> list[Report]:
    b = ctx.config.bound
    return [ctx.sdh.verify_normal_forms(b), ctx.sdh.verify_k_alpha(b)]


@suite("sdh-product")
def _sdh_product(ctx: Context) -> list[Report]:
    b = ctx.config.bound
    s = ctx.sdh
    return [s.verify_unit(b), s.verify_product_oracle(b), s.verify_associativity(b)]


@suite("sdh-bialgebra")
def _sdh_bialgebra(ctx: Context) -> list[Report]:
    b = ctx.config.bound
    s = ctx.sdh
    return [s.verify_counit(b), s.verify_coassociativity(b), s.verify_compatibility(b)]


@suite("pairing")
def _pairing(ctx: Context) -> list[Report]:
    b = ctx.config.bound
    d = ctx.double
    return [d.verify_hopf_pairing(b), *d.plus.verify_bialgebra(b), *d.minus.verify_bialgebra(b)]


@suite("double")
def _double(ctx: Context) -> list[Report]:
    b = ctx.config.bound
    d = ctx.double
    return [*d.verify_double_relations(b), d.verify_bialgebra_iso(b), d.verify_injective(b)]


@suite("sensitivity", default=False)
def _sensitivity(ctx: Context) -> list[Report]:
    return [sensitivity_controls(ctx.backend, ctx.config.bound)]


def run_suite(config: RunConfig, name: str, ctx: Context | None = None) -> list[dict]:
    ctx = ctx or Context(config)
    try:
        reports = SUITES[name](ctx)
    except (TruncationError, BudgetError) as exc:
        rep = Report(name)
        rep.abort()
        rep.failures.append({"aborted": str(exc)})
        reports = [rep]
    return [r.to_json() for r in reports]


def run_suites(config: RunConfig, jobs: int = 1) -> list[dict]:
    if jobs > 1 and len(config.suites) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(run_suite, [config] * len(config.suites), config.suites))
    else:
        ctx = Context(config)
        chunks = [run_suite(config, name, ctx) for name in config.suites]
    return [r for chunk in chunks for r in chunk]


def exit_code(suites: list[dict]) -> int:
    if any(s["failure_count"] for s in suites):
        return EXIT_VIOLATION
    if any(s["aborted"] for s in suites):
        return EXIT_ABORT
    return EXIT_OK


# key parsing -----------------------------------------------------------------------------


def parse_object(text: str, backend: CategoryBackend) -> Iso:
    dims, _, idx = text.partition("#")
    try:
        dim = tuple(int(x) for x in dims.split(","))
        index = int(idx) if idx else 0
    except ValueError as exc:
        raise ConfigError(f"bad object {text!r}") from exc
    if len(dim) != len(backend.zero.dim) or any(x < 0 for x in dim):
        raise ConfigError(f"object {text!r} has the wrong dimension vector")
    if index >= len(backend.objects_of_class(dim)):
        raise ConfigError(f"object {text!r}: class {dim} has fewer than {index + 1} objects")
    return Iso(dim, index)


def parse_key(text: str, backend: CategoryBackend) -> SDHKey:
    """``ALPHA:BETA:A:B``, e.g. ``0:0:1:0`` for [C*_V1]; ``unit`` for the unit."""
    zero = backend.zero
    if text == "unit":
        return SDHKey(zero.dim, zero.dim, zero, zero)
    parts = text.split(":")
    if len(parts) != 4:
        raise ConfigError(f"key {text!r} must look like ALPHA:BETA:A:B")
    alpha, beta = (parse_object(p, backend).dim for p in parts[:2])
    return SDHKey(alpha, beta, parse_object(parts[2], backend), parse_object(parts[3], backend))


# output ------------------------------------------------------------------------------------


def dump(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def config_options(fn):
    opts = [
        click.option("--backend", type=click.Choice(["vect", "quiver"]), default="vect", show_default=True),
        click.option("--quiver", "quiver_file", type=click.Path(), default=None, help="JSON file {vertices, arrows[, q]}."),
        click.option("--q", type=int, default=None, help="Field size (prime). Default 2."),
        click.option("--bound", default=None, help="K_0 bound a,b,...; default 2 for vect, all ones for quivers."),
        click.option("--out", type=click.Path(), default=None, help="Write JSON here instead of stdout."),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


@click.group()
def main():
    """Exact Hall, semi-derived Hall and Drinfeld double Hall algebras."""


@main.command()
@config_options
def objects(backend, quiver_file, q, bound, out):
    """List isomorphism classes within the bound."""
    cfg = RunConfig.build(backend, q, bound, quiver_file)
    ctx = Context(cfg)
    rows = [
        {"label": m.label(), "class": list(m.dim), "index": m.index, "aut": ctx.backend.aut_count(m)}
        for m in ctx.backend.objects_up_to(cfg.bound)
    ]
    dump({"version": SCHEMA_VERSION, "config": cfg.to_json(), "objects": rows}, out)
    click.echo(f"{len(rows)} classes", err=True)


@main.command("hall-table")
@config_options
@click.option("--inject-fault", is_flag=True, hidden=True, help="Test mode: corrupt one Hall number.")
def hall_table(backend, quiver_file, q, bound, out, inject_fault):
    """Every nonzero Hall number within the bound, computed two ways."""
    cfg = RunConfig.build(backend, q, bound, quiver_file, inject_fault=inject_fault)
    rows = Context(cfg).hall.hall_table(cfg.bound)
    dump({"version": SCHEMA_VERSION, "config": cfg.to_json(), "rows": rows}, out)
    bad = sum(not r["agree"] for r in rows)
    click.echo(f"{len(rows)} rows, {bad} disagreements", err=True)
    sys.exit(EXIT_VIOLATION if bad else EXIT_OK)


@main.command()
@config_options
@click.option("--suite", "suite_names", default=None, help="Comma-separated suite names; 'all' adds the non-default ones.")
@click.option("--jobs", type=int, default=1, show_default=True, help="Worker processes; suites run independently.")
@click.option("--inject-fault", is_flag=True, hidden=True, help="Test mode: corrupt one Hall number.")
@click.option("--list", "list_only", is_flag=True, help="List suite names and exit.")
def verify(backend, quiver_file, q, bound, out, suite_names, jobs, inject_fault, list_only):
    """Run verification suites and report per-suite results."""
    if list_only:
        for name in SUITES:
            click.echo(name + ("" if name in DEFAULT_SUITES else " (not default)"))
        return
    if suite_names is None:
        names = tuple(DEFAULT_SUITES)
    elif suite_names == "all":
        names = tuple(SUITES)
    else:
        names = tuple(n.strip() for n in suite_names.split(",") if n.strip())
    unknown = [n for n in names if n not in SUITES]
    if unknown or not names:
        raise ConfigError(f"unknown suite(s) {unknown}; known: {sorted(SUITES)}")
    if jobs < 1:
        raise ConfigError("--jobs must be at least 1")
    cfg = RunConfig.build(backend, q, bound, quiver_file, suites=names, inject_fault=inject_fault)
    suites = run_suites(cfg, jobs)
    dump({"version": SCHEMA_VERSION, "config": cfg.to_json(), "suites": suites}, out)
    for s in suites:
        status = "PASS" if not s["failure_count"] and not s["aborted"] else "FAIL"
        click.echo(f"{s['name']}: {status} ({s['instances']} instances, {s['failure_count']} failures, {s['aborted']} aborted)", err=True)
    sys.exit(exit_code(suites))


@main.group()
def sdh():
    """Structure constants of the semi-derived Hall algebra."""


@sdh.command()
@config_options
@click.argument("x")
@click.argument("y")
def mul(backend, quiver_file, q, bound, out, x, y):
    """Product of two basis keys ALPHA:BETA:A:B (A, B as dims[#index])."""
    cfg = RunConfig.build(backend, q, bound, quiver_file)
    alg = SDHAlgebra(make_backend(cfg.backend, cfg.q, cfg.quiver), bound=cfg.bound)
    kx, ky = parse_key(x, alg.backend), parse_key(y, alg.backend)
    terms = _terms(alg.product_keys(kx, ky))
    dump({"version": SCHEMA_VERSION, "config": cfg.to_json(), "x": kx.to_json(), "y": ky.to_json(), "terms": terms}, out)


@sdh.command()
@config_options
@click.argument("x")
def coprod(backend, quiver_file, q, bound, out, x):
    """Coproduct of a basis key ALPHA:BETA:A:B."""
    cfg = RunConfig.build(backend, q, bound, quiver_file)
    alg = SDHAlgebra(make_backend(cfg.backend, cfg.q, cfg.quiver), bound=cfg.bound)
    kx = parse_key(x, alg.backend)
    coproduct = alg.coproduct_key(kx)
    for left, right in coproduct:
        for k in (left, right):
            alg._emit({}, k, 0)
    dump({"version": SCHEMA_VERSION, "config": cfg.to_json(), "x": kx.to_json(), "terms": _terms(coproduct)}, out)


def run(argv: list[str] | None = None) -> int:
    """Entry point with the exit-code contract applied to every error path."""
    try:
        main.main(args=argv, standalone_mode=False)
    except SystemExit as exc:
        return int(exc.code or 0)
    except click.exceptions.Abort:
        return EXIT_CONFIG
    except click.ClickException as exc:
        exc.show()
        return EXIT_CONFIG
    except ConfigError as exc:
        click.echo(f"config error: {exc}", err=True)
        return EXIT_CONFIG
    except (TruncationError, BudgetError) as exc:
        click.echo(f"aborted: {exc}", err=True)
        return EXIT_ABORT
    return EXIT_OK


def entry() -> None:
    sys.exit(run())


if __name__ == "__main__":
    entry()
