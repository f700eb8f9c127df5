"""``toledo`` command line.

Exit codes: 0 on success, 2 when an input fails to parse or validate,
3 when an internal consistency check fails (margin check, oracle
mismatch, or a violated invariant).
"""

from __future__ import annotations

import logging
import re
import sys
from pathlib import Path

import click

from . import cech, report
from .divisors import (
    a_value,
    cohomology_dims,
    divisible_by_three,
    has_twisted_one_form,
    pair_sum,
    parse_divisor,
    star_certificate,
    star_certificate_floorform,
    twisted_one_form_h0,
    zero,
)
from .families import (
    CONDITIONS,
    Family,
    FamilyWitness,
    check_witness,
    derived_quantities,
    toledo_of_witness,
)
from .seifert import orbifold_presentation, parse_signature
from .spectrum import GroupVariant, default_jobs, toledo_spectrum

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3

# options whose value may legitimately start with "-" (negative F-coefficients)
_VALUE_OPTS = ("--a", "--b", "--sum", "--divisor", "--d2")
_NEG = re.compile(r"^-\d")


class InternalFailure(Exception):
    pass


def _join_negative(argv: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTS and i + 1 < len(argv) and _NEG.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _kv_lines(pairs) -> str:
    width = max(len(k) for k, _ in pairs)
    return "".join(f"{k:<{width}}  {v}\n" for k, v in pairs)


fmt_option = click.option("--format", "fmt", type=click.Choice(["table", "json", "csv"]),
                          default="table", show_default=True)
out_option = click.option("--out", type=click.Path(dir_okay=False), default=None,
                          help="Write the report here instead of stdout.")
m_option = click.option("--m", "m_text", required=True,
                        help='Multiplicities, e.g. "2,3,11" (optionally ";c0:c1,...").')


@click.group()
@click.option("-v", "--verbose", count=True)
def cli(verbose):
    """Orbifold Toledo invariants of Seifert fibered homology spheres."""
    logging.basicConfig(level=logging.WARNING - 10 * min(verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")


@cli.command("enumerate")
@m_option
@click.option("--group", "group", default="u21", show_default=True, help="u21 or pu21")
@fmt_option
@click.option("--witness-cap", type=click.IntRange(min=0), default=100, show_default=True)
@click.option("--margin-delta", type=click.IntRange(min=0), default=3, show_default=True,
              help="Window widening for the completeness check; 0 skips it.")
@click.option("--jobs", type=click.IntRange(min=1), default=None,
              help="Worker threads (default: $TOLEDO_JOBS or 1).")
@out_option
def enumerate_cmd(m_text, group, fmt, witness_cap, margin_delta, jobs, out):
    """Toledo spectrum and component lower bound."""
    sig = parse_signature(m_text)
    variant = GroupVariant.parse(group)
    rep = toledo_spectrum(sig, variant, witness_cap=witness_cap,
                          margin_delta=margin_delta or None, jobs=jobs or default_jobs())
    render = {"json": report.spectrum_json, "csv": report.spectrum_csv,
              "table": report.spectrum_table}[fmt]
    _emit(render(rep), out)
    if rep.margin_check_passed is False:
        raise InternalFailure(f"completeness margin check failed for {sig} "
                              f"(delta {margin_delta})")


def _star_dict(sig, total, sums):
    cert = star_certificate(sig, total, sums)
    floor = star_certificate_floorform(sig, total, sums)
    divisible = divisible_by_three(sig, total, sums)
    if (cert is not None) != divisible or (floor is not None) != divisible:
        raise InternalFailure("the two divisibility-by-3 forms disagree")
    if cert is not None and not cert.verify(sig, total, sums):
        raise InternalFailure("star certificate failed to verify")
    return {
        "divisible": divisible,
        "certificate": None if cert is None else cert.as_dict(),
        "floor_form": None if floor is None else {"y": floor[0], "y_res": list(floor[1])},
    }


def _star_lines(st: dict) -> list[tuple[str, str]]:
    c, f = st["certificate"], st["floor_form"]
    return [
        ("star", "none" if c is None else f"y={c['y']} y_res={c['y_res']} s={c['s']}"),
        ("star_floor", "none" if f is None else f"y={f['y']} y_res={f['y_res']}"),
    ]


@cli.command()
@click.option("--family", type=click.Choice([f.value for f in Family]), required=True)
@m_option
@click.option("--a", "a_text", default=None, help='Divisor literal "a:a1,...,an".')
@click.option("--b", "b_text", default=None, help='Divisor literal "b:b1,...,bn".')
@fmt_option
@out_option
def check(family, m_text, a_text, b_text, fmt, out):
    """Test one parameter tuple against a family's conditions."""
    sig = parse_signature(m_text)
    fam = Family(family)
    if fam is Family.REDUCIBLE_TERNARY:
        text = b_text or a_text
        if text is None:
            raise click.UsageError("reducible-ternary needs a divisor (--b or --a)")
        w = FamilyWitness.reducible(parse_divisor(sig, text))
    elif fam is Family.TRIVIAL:
        a = parse_divisor(sig, a_text) if a_text else zero(sig)
        b = parse_divisor(sig, b_text) if b_text else zero(sig)
        w = FamilyWitness(fam, a, b)
    else:
        if a_text is None or b_text is None:
            raise click.UsageError(f"{fam.value} needs both --a and --b")
        w = FamilyWitness(fam, parse_divisor(sig, a_text), parse_divisor(sig, b_text))

    verdict = check_witness(w)
    data = {
        "signature": list(sig.m),
        "family": fam.value,
        "a": w.a.literal(),
        "b": w.b.literal(),
        "ok": verdict.ok,
        "failed_conditions": [{"label": k, "condition": CONDITIONS[k]}
                              for k in verdict.failed_conditions],
        "A": report.frac(a_value(w.a)),
        "B": report.frac(a_value(w.b)),
        "tau": report.frac(toledo_of_witness(w)),
    }
    if fam in (Family.STABLE_TERNARY, Family.STABLE_BINARY):
        q = derived_quantities(w.a, w.b)
        data["d2"] = q.d2
        data["star"] = _star_dict(sig, *pair_sum(w.a, w.b))

    if fmt == "json":
        _emit(report.dumps(data), out)
        return
    if fmt == "csv":
        raise click.UsageError("csv output is only available for enumerate")
    rows = [("signature", str(sig)), ("family", fam.value), ("a", data["a"]),
            ("b", data["b"]), ("A", data["A"]), ("B", data["B"]),
            ("verdict", "ok" if verdict.ok else "rejected")]
    rows += [(f"failed {k}", CONDITIONS[k]) for k in verdict.failed_conditions]
    rows.append(("tau", data["tau"]))
    if "star" in data:
        rows.append(("d2", str(data["d2"])))
        rows += _star_lines(data["star"])
    _emit(_kv_lines(rows), out)


@cli.command()
@m_option
@click.option("--sum", "sum_text", required=True, help='Raw class "t:t1,...,tn".')
@fmt_option
@out_option
def star(m_text, sum_text, fmt, out):
    """Divisibility-by-3 certificate for a summed class (both forms)."""
    sig = parse_signature(m_text)
    head, sep, tail = sum_text.partition(":")
    if not sep:
        raise ValueError(f"sum literal {sum_text!r} must look like 't:t1,...,tn'")
    try:
        total = int(head)
        sums = [int(t) for t in tail.split(",") if t.strip()]
    except ValueError as exc:
        raise ValueError(f"bad sum literal {sum_text!r}") from exc
    if len(sums) != sig.n:
        raise ValueError(f"expected {sig.n} entries after ':', got {len(sums)}")
    st = _star_dict(sig, total, sums)
    if fmt == "json":
        _emit(report.dumps({"signature": list(sig.m), "sum": sum_text, **st}), out)
    else:
        _emit(_kv_lines(_star_lines(st)), out)


@cli.command()
@m_option
@click.option("--divisor", "div_text", required=True, help='Divisor literal "a:a1,...,an".')
@fmt_option
@out_option
def cohomology(m_text, div_text, fmt, out):
    """h0, h1 and the twisted one-form dimension of a vertical line bundle."""
    sig = parse_signature(m_text)
    d = parse_divisor(sig, div_text)
    h0, h1 = cohomology_dims(d)
    data = {
        "signature": list(sig.m),
        "divisor": d.literal(),
        "value": report.frac(a_value(d)),
        "h0": h0,
        "h1": h1,
        "twisted_one_form_h0": twisted_one_form_h0(d),
        "has_twisted_one_form": has_twisted_one_form(d),
        "orbifold_group": orbifold_presentation(sig),
    }
    if fmt == "json":
        _emit(report.dumps(data), out)
    else:
        _emit(_kv_lines([(k, str(v)) for k, v in data.items() if k != "signature"]), out)


@cli.command()
@click.option("--d2", type=int, required=True)
@click.option("--d1-max", type=click.IntRange(min=0), required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--random-trials", type=click.IntRange(min=0), default=20, show_default=True)
@click.option("--jobs", type=click.IntRange(min=1), default=None)
@fmt_option
@out_option
def oracle(d2, d1_max, seed, random_trials, jobs, fmt, out):
    """Exact-rank check of the coboundary injectivity criterion."""
    rep = cech.lemma_equivalence_scan(d2, d1_max, random_trials=random_trials, seed=seed,
                                      jobs=jobs or default_jobs())
    if fmt == "json":
        _emit(report.dumps(rep.as_dict()), out)
    else:
        lines = [f"d2 {rep.d2}  sigma {' '.join(rep.sigma.as_strings())}",
                 f"random trials {rep.random_trials} (seed {rep.seed})",
                 f"mismatches {rep.mismatches}", ""]
        d3s = sorted({c.d3 for c in rep.cells}, reverse=True)
        lines.append("d1\\d3 " + " ".join(f"{d3:>4}" for d3 in d3s))
        by = {(c.d1, c.d3): c for c in rep.cells}
        for d1 in sorted({c.d1 for c in rep.cells}):
            marks = []
            for d3 in d3s:
                c = by[(d1, d3)]
                marks.append(f"{('I' if c.injective else '.') + ('' if c.injective == c.predicate else '!'):>4}")
            lines.append(f"{d1:>5} " + " ".join(marks))
        _emit("\n".join(lines) + "\n", out)
    if rep.mismatches:
        raise InternalFailure(f"{rep.mismatches} oracle mismatches for d2 = {d2}")


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        cli.main(args=_join_negative(argv), prog_name="toledo", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return EXIT_INPUT
    except click.exceptions.Abort:
        return EXIT_INPUT
    except InternalFailure as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_INTERNAL
    except (AssertionError, cech.SearchExhausted) as exc:
        click.echo(f"internal error: {exc}", err=True)
        return EXIT_INTERNAL
    except (ValueError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_INPUT
    return EXIT_OK


def main() -> None:
    sys.exit(run())
