"""Curated pairs with expected values, and the verify-everything harness.

Catalog files are TOML.  Each ``[[entry]]`` gives a pair H ⊂ G by its
restriction matrix (rationals as strings), an optional concrete realization
of h inside a Chevalley basis, optional invariant sets, and an
``expected`` table whose values each carry a ``source`` note.
``[[family]]`` tables expand to one entry per parameter value.
See docs/catalog.md for the schema.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import combinations_with_replacement
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .embed import EmbeddingSpec, embed_validate
from .homog import FAILS, CatalogDataError, one_sided_report, verify_theorems
from .liealg import EmbeddedSubalgebra, orbit_dims_at, realize
from .poly import parse_polynomial
from .repth import Decomposition, ReductiveSpec, Weight, adjoint_decomposition, branch, isotropy_module

SCHEMA_VERSION = 1
ENV_VAR = "COISO_CATALOG"

ENTRY_QUANTITIES = {
    "ctilde",
    "rtilde",
    "defect",
    "s_regular",
    "fixed_dim",
    "nullcone_dim",
    "quotient_dim",
    "branch_adjoint",
    "isotropy",
    "branch",
    "c",
    "r",
    "multiplicity_free_up_to",
    "orbit_identity",
    "symmetric_orbits",
    "sampled_quotient_dim",
    "diamonds",
}
INVARIANT_QUANTITIES = {"poisson_rank", "relations_hold", "relations_fail", "bracket_vanishes", "invariant"}
BUILDERS = {"binary-quadratics", "sp4-short-levi", "trace-powers", "torus-monomials"}
ENTRY_KEYS = {"label", "big", "small", "restriction", "provenance", "expected", "realization", "invariants", "notes"}
FAMILY_KEYS = {"family", "label", "n_min", "n_max", "provenance", "expected", "notes"}

MATCH, MISMATCH, SKIPPED = "match", "mismatch", "skipped"


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class Expected:
    value: object
    source: str


@dataclass
class InvariantSpec:
    name: str
    builder: str
    params: dict
    relations: dict[str, str]
    expected: dict[str, Expected]


@dataclass
class CatalogEntry:
    label: str
    embedding: EmbeddingSpec
    expected: dict[str, Expected]
    provenance: str
    realization: dict | None = None
    invariants: list[InvariantSpec] = field(default_factory=list)
    notes: str = ""
    source_file: str = ""


@dataclass
class QuantityVerdict:
    name: str
    status: str
    expected: object = None
    computed: object = None
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "expected": _plain(self.expected),
            "computed": _plain(self.computed),
            "reason": self.reason,
        }


@dataclass
class EntryVerdict:
    label: str
    quantities: list[QuantityVerdict] = field(default_factory=list)

    @property
    def mismatches(self) -> list[QuantityVerdict]:
        return [q for q in self.quantities if q.status == MISMATCH]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def counts(self) -> dict[str, int]:
        out = {MATCH: 0, MISMATCH: 0, SKIPPED: 0}
        for q in self.quantities:
            out[q.status] += 1
        return out

    def to_dict(self) -> dict:
        return {"label": self.label, "ok": self.ok, "quantities": [q.to_dict() for q in self.quantities]}


def _plain(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else int(v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    return v


# families of pairs


def fund_eps(family: str, n: int) -> list[list[Fraction]]:
    """Fundamental weights of a classical group in epsilon coordinates."""
    h = Fraction(1, 2)
    if family == "A":
        return [[Fraction(1)] * (i + 1) + [Fraction(0)] * (n - i) for i in range(n)]
    if family == "C":
        return [[Fraction(1)] * (i + 1) + [Fraction(0)] * (n - i - 1) for i in range(n)]
    if family == "B":
        out = [[Fraction(1)] * (i + 1) + [Fraction(0)] * (n - i - 1) for i in range(n - 1)]
        return out + [[h] * n]
    if family == "D":
        out = [[Fraction(1)] * (i + 1) + [Fraction(0)] * (n - i - 1) for i in range(n - 2)]
        return out + [[h] * (n - 1) + [-h], [h] * n]
    raise CatalogError(f"no epsilon model for family {family}")


def eps_to_fund(family: str, v) -> list[Fraction]:
    n = len(v)
    if family == "A":
        return [v[i] - v[i + 1] for i in range(n - 1)]
    if family == "C":
        return [v[i] - v[i + 1] for i in range(n - 1)] + [v[-1]]
    if family == "B":
        return [v[i] - v[i + 1] for i in range(n - 1)] + [2 * v[-1]]
    if family == "D":
        return [v[i] - v[i + 1] for i in range(n - 1)] + [v[-2] + v[-1]]
    raise CatalogError(f"no epsilon model for family {family}")


def restriction_from_eps(family: str, rank: int, image) -> list[list[Fraction]]:
    """Columns are H-coordinates of the images of G's fundamental weights."""
    cols = [image(w) for w in fund_eps(family, rank)]
    return [list(r) for r in zip(*cols)]


def _family_pair(kind: str, n: int) -> tuple[str, str, list[list[Fraction]], str]:
    if kind == "sl-sl":
        big, small = f"A{n}", f"A{n - 1}" if n > 1 else "1"
        return big, small, restriction_from_eps("A", n, lambda v: eps_to_fund("A", v[:n])), f"sl{n + 1}>sl{n}"
    if kind == "sl-gl":
        big, small = f"A{n}", (f"A{n - 1}xT1" if n > 1 else "T1")
        mat = restriction_from_eps("A", n, lambda v: eps_to_fund("A", v[:n]) + [sum(v[:n]) - n * v[n]])
        return big, small, mat, f"sl{n + 1}>gl{n}"
    if kind == "spin-spin":
        m = n // 2
        if n % 2:  # B_m > D_m
            if m == 2:
                mat = restriction_from_eps("B", 2, lambda v: [v[0] - v[1], v[0] + v[1]])
                return "B2", "A1xA1", mat, "spin5>spin4"
            return f"B{m}", f"D{m}", restriction_from_eps("B", m, lambda v: eps_to_fund("D", v)), f"spin{n}>spin{n - 1}"
        if m < 3:
            raise CatalogError("spin-spin family needs n >= 5")
        small = "B2" if m == 3 else f"B{m - 1}"
        mat = restriction_from_eps("D", m, lambda v: eps_to_fund("B", v[: m - 1]))
        return f"D{m}", small, mat, f"spin{n}>spin{n - 1}"
    raise CatalogError(f"unknown family {kind!r}")


def family_rank(kind: str, n: int) -> int:
    return n if kind.startswith("sl") else n // 2


# parsing


def _spec(value, where) -> ReductiveSpec:
    try:
        if isinstance(value, str):
            return ReductiveSpec.parse(value)
        if isinstance(value, dict):
            unknown = set(value) - {"factors", "torus"}
            if unknown:
                raise CatalogError(f"{where}: unknown keys {sorted(unknown)}")
            return ReductiveSpec(tuple(value.get("factors", ())), int(value.get("torus", 0)))
    except CatalogError:
        raise
    except ValueError as exc:
        raise CatalogError(f"{where}: {exc}") from None
    raise CatalogError(f"{where}: group must be a string or a {{factors, torus}} table")


def _fraction(x, where) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise CatalogError(f"{where}: rationals must be integers or strings, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise CatalogError(f"{where}: not a rational number: {x!r}") from None


def _expected(table, allowed, where) -> dict[str, Expected]:
    if not isinstance(table, dict):
        raise CatalogError(f"{where}: expected must be a table")
    out = {}
    for name, item in table.items():
        if name not in allowed:
            raise CatalogError(f"{where}: unknown quantity {name!r}")
        if not isinstance(item, dict) or "value" not in item:
            raise CatalogError(f"{where}.{name}: needs a value")
        source = item.get("source", "")
        if not isinstance(source, str) or not source.strip():
            raise CatalogError(f"{where}.{name}: every expected value needs a source note")
        extra = set(item) - {"value", "source"}
        if extra:
            raise CatalogError(f"{where}.{name}: unknown keys {sorted(extra)}")
        out[name] = Expected(item["value"], source)
    for key in ("ctilde", "c", "r", "rtilde", "defect"):
        if key in out:
            v = out[key].value
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise CatalogError(f"{where}.{key}: must be a non-negative integer, got {v!r}")
    return out


def _invariants(items, where) -> list[InvariantSpec]:
    if not isinstance(items, list):
        raise CatalogError(f"{where}: invariants must be an array of tables")
    out = []
    for k, item in enumerate(items):
        w = f"{where}[{k}]"
        name = item.get("name")
        builder = item.get("builder")
        if not name or builder not in BUILDERS:
            raise CatalogError(f"{w}: needs a name and a builder in {sorted(BUILDERS)}")
        rel = item.get("relations", {})
        if not isinstance(rel, dict) or not all(isinstance(v, str) for v in rel.values()):
            raise CatalogError(f"{w}: relations must map names to polynomial strings")
        params = {k2: v for k2, v in item.items() if k2 not in {"name", "builder", "relations", "expected"}}
        out.append(InvariantSpec(name, builder, params, dict(rel), _expected(item.get("expected", {}), INVARIANT_QUANTITIES, w)))
    return out


def _entry(raw: dict, where: str, source_file: str) -> CatalogEntry:
    unknown = set(raw) - ENTRY_KEYS
    if unknown:
        raise CatalogError(f"{where}: unknown keys {sorted(unknown)}")
    for key in ("label", "big", "small", "restriction", "provenance"):
        if key not in raw:
            raise CatalogError(f"{where}: missing {key!r}")
    label = raw["label"]
    w = f"{where} ({label})"
    big, small = _spec(raw["big"], f"{w}.big"), _spec(raw["small"], f"{w}.small")
    rows = raw["restriction"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise CatalogError(f"{w}.restriction: must be a list of rows")
    mat = tuple(tuple(_fraction(x, f"{w}.restriction") for x in row) for row in rows)
    try:
        emb = EmbeddingSpec(big, small, mat, label)
    except ValueError as exc:
        raise CatalogError(f"{w}: {exc}") from None
    real = raw.get("realization")
    if real is not None:
        if not isinstance(real, dict) or not isinstance(real.get("h"), list):
            raise CatalogError(f"{w}.realization: needs an array h of label tables")
        for vec in real["h"]:
            if not isinstance(vec, dict):
                raise CatalogError(f"{w}.realization: each h vector is a table label -> rational")
            for x in vec.values():
                _fraction(x, f"{w}.realization")
    return CatalogEntry(
        label=label,
        embedding=emb,
        expected=_expected(raw.get("expected", {}), ENTRY_QUANTITIES, w),
        provenance=raw["provenance"],
        realization=real,
        invariants=_invariants(raw.get("invariants", []), f"{w}.invariants"),
        notes=raw.get("notes", ""),
        source_file=source_file,
    )


def _expand_family(raw: dict, where: str, source_file: str, max_rank: int | None) -> list[CatalogEntry]:
    unknown = set(raw) - FAMILY_KEYS
    if unknown:
        raise CatalogError(f"{where}: unknown keys {sorted(unknown)}")
    kind = raw.get("family")
    lo, hi = raw.get("n_min"), raw.get("n_max")
    if not isinstance(lo, int) or not isinstance(hi, int) or lo > hi:
        raise CatalogError(f"{where}: needs integer n_min <= n_max")
    if "provenance" not in raw:
        raise CatalogError(f"{where}: missing 'provenance'")
    expected = _expected(raw.get("expected", {}), ENTRY_QUANTITIES, where)
    out = []
    for n in range(lo, hi + 1):
        if max_rank is not None and family_rank(kind, n) > max_rank:
            continue
        big, small, mat, default_label = _family_pair(kind, n)
        label = raw.get("label", "{default}").format(n=n, n1=n + 1, n0=n - 1, default=default_label)
        emb = EmbeddingSpec(ReductiveSpec.parse(big), ReductiveSpec.parse(small), mat, label)
        out.append(CatalogEntry(label, emb, expected, raw["provenance"], notes=raw.get("notes", ""), source_file=source_file))
    return out


def loads(text: str, source: str = "<string>", max_rank: int | None = None) -> list[CatalogEntry]:
    if not text.strip():
        return []
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise CatalogError(f"{source}: {exc}") from None
    version = data.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise CatalogError(f"{source}: unsupported schema_version {version}")
    unknown = set(data) - {"schema_version", "title", "entry", "family"}
    if unknown:
        raise CatalogError(f"{source}: unknown top-level keys {sorted(unknown)}")
    entries = [_entry(raw, f"{source}: entry {k + 1}", source) for k, raw in enumerate(data.get("entry", []))]
    for k, raw in enumerate(data.get("family", [])):
        entries += _expand_family(raw, f"{source}: family {k + 1}", source, max_rank)
    _check_duplicates(entries)
    return entries


def _check_duplicates(entries):
    seen = set()
    for e in entries:
        if e.label in seen:
            raise CatalogError(f"duplicate label {e.label!r}")
        seen.add(e.label)


def load(path, max_rank: int | None = None) -> list[CatalogEntry]:
    """Load a catalog file, or every ``*.toml`` file in a directory."""
    p = Path(path)
    if p.is_dir():
        entries = []
        for f in sorted(p.glob("*.toml")):
            entries += load(f, max_rank)
        _check_duplicates(entries)
        return entries
    return loads(p.read_text(encoding="utf-8"), str(p), max_rank)


def default_catalog_path():
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(str(resources.files("coiso") / "data"))


def load_default(max_rank: int | None = None) -> list[CatalogEntry]:
    return load(default_catalog_path(), max_rank)


def find(entries, label: str) -> CatalogEntry:
    for e in entries:
        if e.label == label:
            return e
    raise KeyError(label)


# verification


def parse_decomposition(h: ReductiveSpec, items) -> dict[Weight, int]:
    """["1,1", "2*1,0", ";1,0"] -> {weight: multiplicity}."""
    out: dict[Weight, int] = {}
    for s in items:
        mult, star, rest = s.partition("*")
        if star:
            k, text = int(mult), rest
        else:
            k, text = 1, s
        w = h.parse_weight(text)
        out[w] = out.get(w, 0) + k
    return out


def decomposition_strings(dec: Decomposition) -> list[str]:
    return [f"{m}*{w}" if m != 1 else str(w) for w, m in dec.sorted_items()]


def entry_rng(seed: int, label: str, purpose: str) -> random.Random:
    return random.Random(f"{seed}:{label}:{purpose}")


def _dominant_weights_up_to(g: ReductiveSpec, total: int):
    n = g.semisimple_rank
    for size in range(total + 1):
        for combo in combinations_with_replacement(range(n), size):
            coords = [0] * n
            for i in combo:
                coords[i] += 1
            yield Weight(tuple(coords), (Fraction(0),) * g.torus_rank)


def max_branching_multiplicity(e: EmbeddingSpec, total: int) -> int:
    best = 0
    for lam in _dominant_weights_up_to(e.big, total):
        dec = branch(e, lam)
        best = max([best] + list(dec.summands.values()))
    return best


def multiplicity_witness(e: EmbeddingSpec, total: int) -> Weight | None:
    """First dominant weight, by coordinate sum, whose restriction has a repeated summand."""
    for lam in _dominant_weights_up_to(e.big, total):
        if any(m > 1 for m in branch(e, lam).summands.values()):
            return lam
    return None


def realize_entry(entry: CatalogEntry) -> EmbeddedSubalgebra:
    real = entry.realization
    gens = [{k: Fraction(v) for k, v in vec.items()} for vec in real["h"]]
    return realize(entry.embedding, gens, closure=bool(real.get("closure", False)))


def build_invariant_set(entry: CatalogEntry, spec: InvariantSpec, sub: EmbeddedSubalgebra | None):
    from . import poisson

    p = spec.params
    lam = Fraction(p["lambda"]) if "lambda" in p else None
    s = Fraction(p["s"]) if "s" in p else None
    if spec.builder == "binary-quadratics":
        inv = poisson.binary_quadratic_set(lam, s)
    elif sub is None:
        raise CatalogError(f"{entry.label}: builder {spec.builder!r} needs a realization")
    elif spec.builder == "sp4-short-levi":
        inv = poisson.sp4_short_levi_set(sub, lam, s)
    elif spec.builder == "trace-powers":
        inv = poisson.symmetric_trace_set(sub, tuple(p.get("degrees", (2, 3))))
    else:
        inv = poisson.torus_monomial_set(sub)
    inv.label = f"{entry.label}/{spec.name}"
    if spec.relations:
        inv.relations = [
            poisson.Relation(name, parse_polynomial(text, inv.names)) for name, text in spec.relations.items()
        ]
    return inv


def _compare(name, expected: Expected, computed) -> QuantityVerdict:
    exp = expected.value
    if isinstance(exp, bool) or isinstance(computed, bool):
        ok = exp is computed
    else:
        ok = exp == computed
    return QuantityVerdict(name, MATCH if ok else MISMATCH, exp, computed)


def verify_entry(entry: CatalogEntry, seed: int = 0, points: int = 100) -> EntryVerdict:
    """Recompute every expected value; mismatches are recorded, never raised."""
    verdict = EntryVerdict(entry.label)
    q = verdict.quantities
    e = entry.embedding
    exp = entry.expected

    def guard(name, fn):
        try:
            fn()
        except Exception as exc:  # recorded as data
            q.append(QuantityVerdict(name, MISMATCH, getattr(exp.get(name), "value", None), None, f"{type(exc).__name__}: {exc}"))

    validation = embed_validate(e)
    if not validation.passed:
        bad = "; ".join(f"{c.name}: {c.detail}" for c in validation.checks if not c.passed)
        q.append(QuantityVerdict("embedding", MISMATCH, "valid", "invalid", bad))
        return verdict
    q.append(QuantityVerdict("embedding", MATCH, "valid", "valid"))

    report = None

    def theorems():
        nonlocal report
        report = verify_theorems(e)
        failed = report.failures
        q.append(QuantityVerdict("theorem_checks", MATCH if not failed else MISMATCH, [], failed))

    guard("theorem_checks", theorems)
    if report is not None:
        computed = {
            "ctilde": report.c_tilde,
            "rtilde": report.r_tilde,
            "defect": report.defect,
            "s_regular": report.s_regular,
            "fixed_dim": report.fixed_dim,
            "nullcone_dim": report.nullcone_dim,
            "quotient_dim": report.quotient_dim,
            "diamonds": list(report.diamond_verdicts),
        }
        for name, value in computed.items():
            if name in exp:
                q.append(_compare(name, exp[name], value))
    for name in ("branch_adjoint", "isotropy"):
        if name in exp:

            def dec(name=name):
                got = adjoint_decomposition(e) if name == "branch_adjoint" else isotropy_module(e)
                want = parse_decomposition(e.small, exp[name].value)
                q.append(QuantityVerdict(name, MATCH if got == want else MISMATCH, exp[name].value, decomposition_strings(got)))

            guard(name, dec)
    if "branch" in exp:

        def branches():
            for item in exp["branch"].value:
                lam = e.big.parse_weight(item["weight"])
                got = branch(e, lam)
                want = parse_decomposition(e.small, item["result"])
                q.append(
                    QuantityVerdict(f"branch[{item['weight']}]", MATCH if got == want else MISMATCH, item["result"], decomposition_strings(got))
                )

        guard("branch", branches)
    if "multiplicity_free_up_to" in exp:

        def mfree():
            bound = exp["multiplicity_free_up_to"].value
            m = max_branching_multiplicity(e, bound)
            q.append(QuantityVerdict("multiplicity_free_up_to", MATCH if m <= 1 else MISMATCH, bound, f"max multiplicity {m}"))

        guard("multiplicity_free_up_to", mfree)
    if "c" in exp or "r" in exp:

        def onesided():
            if "c" not in exp or "r" not in exp:
                raise CatalogDataError("one-sided data needs both c and r")
            rep = one_sided_report(e, exp["c"].value, exp["r"].value)
            failed = [k for k, v in rep.checks.items() if v == FAILS]
            q.append(QuantityVerdict("one_sided_checks", MATCH if not failed else MISMATCH, [], failed))

        guard("c", onesided)

    sub = None
    if entry.realization is not None:

        def do_realize():
            nonlocal sub
            sub = realize_entry(entry)
            q.append(QuantityVerdict("realization_dim_m", MATCH, isotropy_module(e).dim, sub.dim_m))

        guard("realization", do_realize)
    if sub is not None:
        _verify_orbits(entry, sub, seed, points, q)
    elif any(k in exp for k in ("orbit_identity", "symmetric_orbits", "sampled_quotient_dim")):
        q.append(QuantityVerdict("orbit_identity", SKIPPED, reason="no realization"))

    for spec in entry.invariants:
        guard(f"invariants[{spec.name}]", lambda spec=spec: _verify_invariants(entry, spec, sub, seed, points, q))
    return verdict


def _verify_orbits(entry, sub, seed, points, q):
    exp = entry.expected
    rng = entry_rng(seed, entry.label, "orbits")
    n = exp["orbit_identity"].value if "orbit_identity" in exp else points
    dims = [orbit_dims_at(sub, sub.random_point(rng)) for _ in range(n)]
    bad = [tuple(d) for d in dims if d.dim_Gx != d.dim_Hx + d.dim_Gx_cap_m or d.dim_Gx_cap_m < d.dim_Hx_in_m]
    q.append(QuantityVerdict("orbit_identity", MATCH if not bad else MISMATCH, n, f"{n - len(bad)}/{n} points"))
    sym = [d.dim_Gx == 2 * d.dim_Hx for d in dims]
    iff = all(s == (d.dim_Gx_cap_m == d.dim_Hx_in_m) for s, d in zip(sym, dims))
    q.append(QuantityVerdict("orbit_symmetry_criterion", MATCH if iff else MISMATCH, True, iff))
    if "symmetric_orbits" in exp:
        q.append(_compare("symmetric_orbits", exp["symmetric_orbits"], all(sym)))
    if "sampled_quotient_dim" in exp:
        got = sub.dim_m - max(d.dim_Hx for d in dims)
        q.append(_compare("sampled_quotient_dim", exp["sampled_quotient_dim"], got))


def _verify_invariants(entry, spec, sub, seed, points, q):
    from . import poisson

    inv = build_invariant_set(entry, spec, sub)
    prefix = f"{spec.name}."
    exp = spec.expected
    rng = entry_rng(seed, entry.label, spec.name)
    if "invariant" in exp:
        bad = set()
        for _ in range(min(points, 10)):
            bad |= {name for name, _ in inv.invariance_defects(inv.random_point(rng))}
        q.append(_compare(prefix + "invariant", exp["invariant"], not bad))
    if "relations_hold" in exp:
        names = exp["relations_hold"].value
        res = {v.name: v for v in poisson.verify_relation(inv, points, seed, [r for r in inv.relations if r.name in names])}
        ok = [n for n in names if n in res and res[n].passed]
        q.append(_compare(prefix + "relations_hold", Expected(sorted(names), ""), sorted(ok)))
    if "relations_fail" in exp:
        names = exp["relations_fail"].value
        res = {v.name: v for v in poisson.verify_relation(inv, points, seed, [r for r in inv.relations if r.name in names])}
        failed = [n for n in names if n in res and not res[n].passed]
        q.append(_compare(prefix + "relations_fail", Expected(sorted(names), ""), sorted(failed)))
    if "bracket_vanishes" in exp:
        vals = set()
        for _ in range(points):
            y = inv.random_point(rng)
            for i, f in enumerate(inv.generators):
                for g in inv.generators[i + 1 :]:
                    vals.add(inv.bracket_at(f, g, y, rng))
        q.append(_compare(prefix + "bracket_vanishes", exp["bracket_vanishes"], vals <= {0}))
    if "poisson_rank" in exp:
        best, ranks = poisson.generic_rank(inv, rng)
        q.append(_compare(prefix + "poisson_rank", exp["poisson_rank"], best))
