"""Command-line front end.

Exit codes: 0 Verified, 1 Falsified, 2 Inconclusive, 3 input error.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .catalog import CatalogError, build_catalog
from .certificate import CertificateError, parse, serialize
from .engine import BACKENDS, Status, Verdict
from .families import FAMILIES, FamilyError, generate, verify_factorization
from .lefschetz import chi_series, format_table, lefschetz_data
from .relations import REGISTRY, RelationError, export_registry, get_relation, verify

EXIT = {Status.VERIFIED: 0, Status.FALSIFIED: 1, Status.INCONCLUSIVE: 2}
INPUT_ERROR = 3


class InputError(click.ClickException):
    exit_code = INPUT_ERROR


def _emit(verdict: Verdict, as_json: bool, extra: dict = None) -> int:
    if as_json:
        payload = dict(extra or {}, verdict=verdict.to_json())
        click.echo(json.dumps(payload, sort_keys=True, indent=2))
    else:
        click.echo(str(verdict))
    return EXIT[verdict.status]


def _params(text: str) -> dict:
    out = {}
    for item in filter(None, (s.strip() for s in (text or "").split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise InputError(f"bad --params item {item!r}; expected key=value")
        try:
            out[key.strip()] = int(value)
        except ValueError:
            raise InputError(f"parameter {key!r} must be an integer") from None
    return out


backend_opt = click.option("--backend", type=click.Choice(BACKENDS), default="both", show_default=True)
budget_opt = click.option("--budget", type=int, default=None,
                          help="Letter budget for pi1 evaluation (default: $TWIST_BUDGET or 10^7).")
json_opt = click.option("--json", "as_json", is_flag=True, help="Print JSON instead of text.")


@click.group()
@click.version_option(package_name="mcgfactor")
def cli():
    """Dehn twist factorizations: relations, certificates and invariants."""


@cli.command("verify-relation")
@click.option("--name", required=True, help="Registry key, e.g. chain or lantern.")
@click.option("--params", default="", help="Comma separated key=value relation parameters.")
@click.option("--i", "i", type=int)
@click.option("--j", "j", type=int)
@click.option("--h", "h", type=int)
@click.option("--m", "m", type=int)
@click.option("--variant", type=int)
@click.option("--g", "g", type=int, help="Surface genus.")
@click.option("--n", "n", type=int, help="Surface boundary count.")
@backend_opt
@budget_opt
@json_opt
def verify_relation(name, params, i, j, h, m, variant, g, n, backend, budget, as_json):
    """Check one registered relation."""
    p = _params(params)
    for key, val in (("i", i), ("j", j), ("h", h), ("m", m), ("variant", variant)):
        if val is not None:
            p[key] = val
    try:
        surface = None
        if g is not None or n is not None:
            if name not in REGISTRY:
                raise RelationError(f"unknown relation {name!r}")
            entry = REGISTRY[name]
            dg, dn = entry.default_surface(dict(entry.defaults, **p))
            surface = (dg if g is None else g, dn if n is None else n)
        rel, cat = get_relation(name, surface, **p)
    except (RelationError, CatalogError) as exc:
        raise InputError(str(exc)) from None
    verdict = verify(rel, cat, backend, budget)
    return _emit(verdict, as_json, {"relation": rel.to_json()})


@cli.command("generate")
@click.option("--family", required=True, type=click.Choice(sorted(FAMILIES)))
@click.option("--g", "g", type=int)
@click.option("--m", "m", type=int, required=True)
@click.option("--k", "k", type=int, help="Multitwist power (multitwist-power only).")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), help="Output file (default stdout).")
def generate_cmd(family, g, m, k, out):
    """Write a factorization certificate."""
    try:
        f = generate(family, g, m, k)
    except (FamilyError, CatalogError, TypeError) as exc:
        raise InputError(str(exc)) from None
    text = serialize(f)
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_bytes(text.encode())
        click.echo(f"{family}: {f.claimed_length} twists -> {out}", err=True)
    return 0


def _load(path: Path):
    try:
        return parse(Path(path).read_bytes().decode())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except UnicodeDecodeError:
        raise InputError(f"{path} is not UTF-8") from None
    except CertificateError as exc:
        raise InputError(f"{path}: {exc}") from None


@cli.command("verify")
@click.option("--input", "path", required=True, type=click.Path(dir_okay=False, path_type=Path))
@backend_opt
@budget_opt
@json_opt
def verify_cmd(path, backend, budget, as_json):
    """Verify a certificate."""
    f, digest_ok = _load(path)
    verdict = verify_factorization(f, backend, budget)
    if not digest_ok and not as_json:
        click.echo("note: content digest does not match", err=True)
    return _emit(verdict, as_json, {"family": f.family, "length": f.length, "digest_ok": digest_ok})


def _range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        return range(int(lo), int(hi if sep else lo) + 1)
    except ValueError:
        raise InputError(f"bad range {text!r}; expected a..b") from None


@cli.command()
@click.option("--input", "path", type=click.Path(dir_okay=False, path_type=Path), help="Certificate file.")
@click.option("--family", type=click.Choice(sorted(FAMILIES)), help="Series mode: family name.")
@click.option("--g", "g", type=int)
@click.option("--k", "k", type=int)
@click.option("--m-range", default="1..5", show_default=True, help="Series mode: a..b.")
@json_opt
def invariants(path, family, g, k, m_range, as_json):
    """Lefschetz data of a certificate, or the chi series of a family."""
    if (path is None) == (family is None):
        raise InputError("give exactly one of --input or --family")
    if path is not None:
        f, _ = _load(path)
        d = lefschetz_data(f)
        if as_json:
            click.echo(json.dumps(d.to_json(), sort_keys=True, indent=2))
        else:
            rows = [("fiber genus", d.g), ("singular fibers r", d.r), ("chi", d.chi),
                    ("sections", d.n_sections), ("section self-intersection", d.section_self_intersection),
                    ("H1 rank", "unknown" if d.h1_total_rank is None else d.h1_total_rank)]
            click.echo(format_table(rows, ["quantity", "value"]))
            if d.note:
                click.echo(f"note: {d.note}")
        return 0
    try:
        series = chi_series(family, g, _range(m_range), k)
    except (FamilyError, CatalogError, TypeError) as exc:
        raise InputError(str(exc)) from None
    if as_json:
        click.echo(json.dumps([{"m": m, "chi": c} for m, c in series], indent=2))
    else:
        rows = [(m, c, "" if i == 0 else c - series[i - 1][1]) for i, (m, c) in enumerate(series)]
        click.echo(format_table(rows, ["m", "chi", "step"]))
    return 0


@cli.command()
@click.option("--g", "g", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
@json_opt
def catalog(g, n, as_json):
    """List the named curves of a surface model."""
    try:
        cat = build_catalog(g, n)
    except CatalogError as exc:
        raise InputError(str(exc)) from None
    report = cat.report()
    if as_json:
        click.echo(json.dumps(report, sort_keys=True, indent=2))
    else:
        rows = [(r["name"], r["role"], "yes" if r["nonseparating"] else "no",
                 "abstract" if r["hclass"] is None else " ".join(map(str, r["hclass"])))
                for r in report]
        click.echo(format_table(rows, ["curve", "role", "nonsep", "class"]))
    return 0


@cli.command()
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path))
def relations(out):
    """Dump the relation registry as JSON."""
    text = json.dumps(export_registry(), sort_keys=True, indent=2) + "\n"
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_bytes(text.encode())
    return 0


def main(argv=None) -> int:
    try:
        rv = cli.main(args=argv, prog_name="mcgfactor", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return INPUT_ERROR
    except click.exceptions.Abort:
        return INPUT_ERROR
    return rv if isinstance(rv, int) else 0


if __name__ == "__main__":
    sys.exit(main())
