"""End-to-end smoke tests for the python bindings.

Runnable directly (python3 test_smoke.py) or under pytest. The data
directory is taken from MLAT_DATA when set, otherwise resolved relative
to this file.
"""

import os
import sys

import mlat

DATA = os.environ.get(
    "MLAT_DATA",
    os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "data"),
)


def names(L, ids):
    return {L.name_of(a) for a in ids}


def test_generate_and_validate():
    L = mlat.generate("zmod m=12")
    assert L.n == 6
    assert L.name == "zmod(12)"
    report = mlat.validate(L)
    assert report.ok
    assert not report.violations()
    top = L.resolve("1")
    two = L.resolve("2Z")
    assert top == L.top
    assert L.mul(two, two) == L.resolve("4Z")
    assert L.leq(L.mul(two, two), two)


def test_round_trip():
    L = mlat.generate("b4")
    text = mlat.to_text(L)
    again = mlat.from_text(text)
    assert mlat.to_text(again) == text
    assert mlat.isomorphic(L, mlat.relabel(L, 7))


def test_hollow_predicates():
    L = mlat.generate("b4")
    sh = names(L, mlat.strongly_hollow_elements(L))
    assert sh == {"0", "m", "n"}
    csh = names(L, mlat.completely_strongly_hollow_elements(L))
    assert csh == sh
    m = L.resolve("m")
    prof = mlat.hollow_profile(L, m)
    assert prof.strongly_hollow
    assert L.name_of(prof.kappa) == "n"
    assert not mlat.is_strongly_hollow(L, L.top)
    assert mlat.is_representable(L, L.top)
    rep = mlat.minimal_representation(L, L.top)
    assert rep is not None and names(L, rep) == {"m", "n"}
    rep = mlat.minimal_representation(L, L.bottom)
    assert rep == []


def test_profiles():
    L = mlat.generate("zmod m=12")
    prof = mlat.lattice_profile(L)
    assert prof.maximal_count == 2
    assert prof.gelfand
    assert not prof.quasi_local
    assert names(L, prof.minimal_primes) == {"2Z", "3Z"}
    two = mlat.element_profile(L, L.resolve("2Z"))
    assert two.prime and two.maximal
    text = mlat.lattice_profile_text(L)
    assert "gelfand: yes" in text


def test_constructions():
    L = mlat.generate("zmod m=12")
    q = mlat.quotient(L, L.resolve("4Z"))
    assert mlat.isomorphic(q.lattice, mlat.generate("chain_power k=2"))
    loc = mlat.localize_at_prime(L, L.resolve("2Z"))
    assert mlat.isomorphic(loc.lattice, mlat.generate("chain_power k=2"))
    assert loc.forward[L.resolve("3Z")] == loc.lattice.top
    p = mlat.product(mlat.generate("zmod m=4"), mlat.generate("zmod m=9"))
    assert mlat.isomorphic(p.lattice, mlat.generate("zmod m=36"))
    x = p.pair(1, 1)
    assert p.left_of(x) == 1 and p.right_of(x) == 1


def test_residual():
    L = mlat.generate("zmod m=12")
    r = mlat.residual(L, L.resolve("6Z"), L.resolve("2Z"))
    assert L.name_of(r) == "3Z"


def test_verify_suite():
    corpus = ["b4", "zmod m=12", "chain_power k=2"]
    report = mlat.run_suite(corpus, ["all"], workers=2)
    bad = report.violations()
    assert len(bad) == 1
    w = bad[0].witness
    assert w is not None
    assert w.check_id == "T5.5(2=>3)" and w.lattice_name == "b4"
    assert mlat.replay(w)
    allow = mlat.load_allowlist(os.path.join(DATA, "expected.allow"))
    assert not mlat.suite_passes(report, mlat.Allowlist())
    assert mlat.suite_passes(report, allow)
    machine = mlat.report_machine(report)
    again = mlat.report_machine(mlat.run_suite(corpus, ["all"], workers=5))
    assert machine == again
    digest = mlat.canonical_digest(mlat.generate("b4"))
    assert allow.allows("T5.5(2=>3)", digest)


def test_corpus_manifest():
    specs = mlat.load_manifest(os.path.join(DATA, "default.manifest"))
    assert len(specs) == 164
    report = mlat.run_suite(specs[:20], ["P5.4", "L5.2"], workers=4)
    assert all(r.status in ("holds", "hypothesis-unmet") for r in report.results)


def test_enumeration_and_mine():
    totals = [len(mlat.enumerate_mult_lattices(n)) for n in range(1, 5)]
    assert totals == [1, 1, 2, 7]
    res = mlat.mine("scope:element hyp=strongly_hollow concl=idempotent", 4)
    assert not res.holds
    assert res.lattice.n > 0 and res.element >= 0
    res = mlat.mine(
        "scope:element hyp=strongly_hollow,cancellation concl=lattice.le2_maximals", 5
    )
    assert res.holds and res.models_checked > 0


def test_errors():
    try:
        mlat.generate("zmod m=1")
    except mlat.StructureError:
        pass
    else:
        raise AssertionError("expected StructureError")
    try:
        mlat.from_text("lattice broken\nn 1\n")
    except mlat.StructureError:
        pass
    else:
        raise AssertionError("expected StructureError")


def main():
    tests = [(k, v) for k, v in sorted(globals().items()) if k.startswith("test_")]
    for name, fn in tests:
        fn()
        print(f"{name}: ok")
    print(f"{len(tests)} python smoke tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
