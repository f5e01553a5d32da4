"""Acceptance gate: nine exact checks, each printing one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` or directly as a script.
"""
from __future__ import annotations

import itertools
import math
import os
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from builders import Z2, hyperelliptic, two_lines  # noqa: E402
from equidiff import (  # noqa: E402
    AbelianGroup,
    BranchPoint,
    Character,
    arithmetic_genus,
    chi_sets,
    dim_connected,
    element_order,
    m_chi_closed,
    m_chi_divisor,
    pairing_bruteforce,
    pairing_RGQ,
    validate,
)
from equidiff.cli import main as cli_main  # noqa: E402
from equidiff.generate import random_corpus  # noqa: E402
from equidiff.oracle import (  # noqa: E402
    SuperellipticData,
    calibrate,
    oracle_dims,
    to_cover_spec,
)
from equidiff.specfile import parse_spec, serialize  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
SAMPLES = ROOT / "sample_specs"
EXAMPLES = sorted(SAMPLES.glob("*.cover")) + sorted((SAMPLES / "invalid").glob("*.cover"))
TRIVIAL, MINUS = Character(Z2, (0,)), Character(Z2, (1,))

_corpus_cache: list = []


def corpus():
    if not _corpus_cache:
        _corpus_cache.extend(random_corpus(500, seed=20240917))
    return _corpus_cache


class Failure(AssertionError):
    pass


def check(cond, message):
    if not cond:
        raise Failure(message)


def criterion_1():
    for g, N in itertools.product(range(6), range(1, 6)):
        spec = hyperelliptic(g, N)
        check(validate(spec) == [], f"g={g} N={N} does not validate")
        got = (dim_connected(spec, TRIVIAL), dim_connected(spec, MINUS), arithmetic_genus(spec))
        check(got == (0, g + N, g + N), f"g={g} N={N}: {got}")
    return "30 cases"


def criterion_2():
    for m in range(3, 11):
        spec = two_lines(m)
        check(validate(spec) == [], f"m={m} does not validate")
        got = (dim_connected(spec, TRIVIAL), dim_connected(spec, MINUS), arithmetic_genus(spec))
        check(got == (0, m - 1, m - 1), f"m={m}: {got}")
    return "8 cases"


def criterion_3():
    specs = corpus()
    for i, spec in enumerate(specs):
        G = spec.group
        check(G.order <= 24 and spec.genus_y <= 4 and len(spec.branches) <= 6
              and len(spec.nodes) <= 4, f"spec {i} outside the corpus bounds")
        check(validate(spec) == [], f"spec {i} invalid")
        trivial = dim_connected(spec, G.characters()[0])
        check(trivial == spec.genus_y, f"spec {i}: {trivial} != g_Y = {spec.genus_y}")
    return f"{len(specs)} specs"


def criterion_4():
    specs = corpus()
    for i, spec in enumerate(specs):
        total = sum(dim_connected(spec, chi) for chi in spec.group.characters())
        check(total == arithmetic_genus(spec),
              f"spec {i}: sum {total} != p_a {arithmetic_genus(spec)}")
    return f"{len(specs)} specs"


def criterion_5():
    pairs = 0
    for i, spec in enumerate(corpus()):
        for chi in spec.group.characters():
            S = chi_sets(spec, chi)
            a, b = m_chi_closed(spec, chi, S), m_chi_divisor(spec, chi, S)
            check(a == b, f"spec {i} chi={chi}: {a} != {b}")
            pairs += 1
    return f"{pairs} pairs"


def abelian_groups(limit):
    """Invariant-factor forms m1 | m2 | ... of every abelian group of order <= limit."""
    out = [(1,)]

    def extend(prefix, order):
        last = prefix[-1]
        k = 1
        while order * last * k <= limit:
            nxt = prefix + (last * k,)
            out.append(nxt)
            extend(nxt, order * last * k)
            k += 1

    for m in range(2, limit + 1):
        out.append((m,))
        extend((m,), m)
    return out


def criterion_6():
    cases = 0
    groups = abelian_groups(16)
    check(len(groups) == 25, f"expected 25 abelian groups of order <= 16, got {len(groups)}")
    for inv in groups:
        G = AbelianGroup(inv)
        G1 = G.whole
        for gen in G.elements():
            e = element_order(G, gen)
            if e == 1:
                continue
            for t in range(1, e):
                if math.gcd(t, e) != 1:
                    continue
                b = BranchPoint("Q", gen, e, t)
                for chi in G.characters():
                    fast = pairing_RGQ(chi, b, G.order)
                    slow = pairing_bruteforce(chi, b, G1)
                    check(fast == slow, f"G={inv} g={gen} t={t} chi={chi}: {fast} != {slow}")
                    cases += 1
    return f"{len(groups)} groups, {cases} cases"


def _rh_genus(e, exps):
    D = sum(exps)
    twice = -2 * e + sum(e - math.gcd(e, d) for d in exps) + (e - math.gcd(e, D))
    return twice // 2 + 1


def criterion_7():
    direction = calibrate()
    rng = random.Random(7)
    count = 0
    for e in (2, 3, 5, 6):
        done = 0
        while done < 50:
            exps = [rng.randrange(1, e) for _ in range(rng.randint(1, 8))]
            if math.gcd(e, *exps) != 1:
                continue
            data = SuperellipticData.from_exponents(e, exps, direction)
            spec = to_cover_spec(data)
            check(validate(spec) == [] and spec.component_count == 1 and not spec.nodes,
                  f"e={e} {exps}: bad specialization")
            formula = {chi.coords[0]: dim_connected(spec, chi) for chi in spec.group.characters()}
            oracle = oracle_dims(data)
            check(formula == oracle, f"e={e} {exps}: formula {formula} != oracle {oracle}")
            check(sum(oracle.values()) == _rh_genus(e, exps),
                  f"e={e} {exps}: sum {sum(oracle.values())} != genus {_rh_genus(e, exps)}")
            done += 1
            count += 1
    return f"{count} curves, direction={direction}"


NEGATIVES = [
    ("three_branch_z2.cover", "admissibility"),
    ("swap_in_stabilizer.cover", "swap-fixes-branches"),
    ("two_components_unjoined.cover", "disconnected"),
]


def _cli(*argv):
    import io

    out, err = io.StringIO(), io.StringIO()
    code = cli_main([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def criterion_8():
    for name, code in NEGATIVES:
        path = SAMPLES / "invalid" / name
        spec = parse_spec(path.read_text())
        codes = [v.code for v in validate(spec)]
        check(codes == [code], f"{name}: codes {codes}, expected [{code}]")
        status, _, err = _cli("validate", path)
        check(status == 1, f"{name}: exit status {status}")
        check(f" {code} [" in err, f"{name}: stderr lacks {code}: {err!r}")
    spec = parse_spec((SAMPLES / "invalid" / "two_components_unjoined.cover").read_text())
    check(spec.component_count == 2, "disconnected sample must have d = 2")
    return f"{len(NEGATIVES)} specs"


def _run_process(args, seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    proc = subprocess.run([sys.executable, "-m", "equidiff", *map(str, args)],
                          capture_output=True, env=env)
    return proc.returncode, proc.stdout, proc.stderr


def criterion_9():
    runs = 0
    for path in EXAMPLES:
        for command in ("validate", "dims", "genus", "selfcheck"):
            first = _run_process([command, path], 1) if command == "dims" else _cli(command, path)
            second = _run_process([command, path], 2) if command == "dims" else _cli(command, path)
            check(first == second, f"{command} {path.name}: outputs differ")
            runs += 2
        spec = parse_spec(path.read_text())
        text = serialize(spec)
        check(parse_spec(text) == spec, f"{path.name}: parse(serialize(spec)) != spec")
        check(serialize(parse_spec(text)) == text, f"{path.name}: serialize not stable")
    return f"{len(EXAMPLES)} files, {runs} runs"


CRITERIA = [
    (1, "irreducible hyperelliptic golden values", criterion_1, 1.0),
    (2, "two-component golden values", criterion_2, 1.0),
    (3, "trivial character gives g_Y", criterion_3, 10.0),
    (4, "sum rule", criterion_4, 30.0),
    (5, "two-path m equality", criterion_5, 10.0),
    (6, "pairing oracle equivalence", criterion_6, 30.0),
    (7, "superelliptic oracle", criterion_7, 30.0),
    (8, "validation negatives", criterion_8, None),
    (9, "CLI determinism and round trip", criterion_9, None),
]


def run_criterion(number, title, func, limit):
    # corpus generation is shared setup, not part of any single timing
    if number in (3, 4, 5):
        corpus()
    start = time.perf_counter()
    try:
        detail = func()
        error = None
    except Failure as exc:
        detail, error = None, str(exc)
    elapsed = time.perf_counter() - start
    if error is None and limit is not None and elapsed >= limit:
        error = f"took {elapsed:.2f}s, limit {limit:.0f}s"
    status = "PASS" if error is None else "FAIL"
    line = f"{status} criterion {number}: {title} ({error or detail}; {elapsed:.2f}s)"
    return error is None, line


@pytest.mark.parametrize("number,title,func,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, func, limit, capsys):
    ok, line = run_criterion(number, title, func, limit)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
