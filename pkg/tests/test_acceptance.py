"""End-to-end acceptance criteria; each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` (lines show with ``-s``
or in the verbose log below each test id).
"""

import random
import time
from fractions import Fraction as F

import pytest

from ecourant.algebra import check_complex_structure, check_lie, nijenhuis_tensor
from ecourant.cli import run_command
from ecourant.constructions import (
    build_crossed_courant, build_lie2_courant, build_module_courant, build_omni, crossed_to_lie2,
    module_to_lie2,
)
from ecourant.corpus import (
    complex_aff1_realified, corpus_documents, crossed_modules, lie_two_algebras, modules_dim2,
    nijenhuis_triples, omni_suite, random_invertible,
)
from ecourant.courant import check_anchor_lemma, check_ec_axioms, structures_equal
from ecourant.gcs import (
    OmniGCSData, assemble_omni_j, build_nijenhuis_gcs, build_omni_gcs, check_automorphism,
    check_eigenbundle, check_equivalence_theorem, check_gcs_algebraic, check_gcs_integrable,
    induced_bracket, omni_automorphism, omni_integrability_conditions, right_multiplication,
    transport_by_automorphism,
)
from ecourant.io import parse_document, serialize_document
from ecourant.linalg import is_zero, scale


@pytest.fixture
def say(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
        return ok
    return emit


def _builder_structures():
    out = [(f"omni({n})", build_omni(n)) for n in (1, 2, 3)]
    out += [(f"crossed {k}", build_crossed_courant(cm)) for k, cm in crossed_modules().items()]
    out += [(f"lie2 {k}", build_lie2_courant(t)) for k, t in lie_two_algebras().items()]
    return out


def _omni_instances():
    C = build_omni(2)
    out = []
    for name, pi, D in omni_suite():
        data = OmniGCSData(pi, D)
        out.append((name, data, assemble_omni_j(2, data)))
    return C, out


def _integrable_nijenhuis():
    out = []
    for name, g, R, D in nijenhuis_triples():
        C, J = build_nijenhuis_gcs(g, R, D)
        if check_gcs_integrable(C, J).passed:
            out.append((name, C, J.J))
    return out


def test_criterion_01_builder_soundness(say):
    t0 = time.perf_counter()
    structs = _builder_structures()
    bad = [name for name, C in structs if not check_ec_axioms(C).passed]
    elapsed = time.perf_counter() - t0
    n_cm, n_l2 = len(crossed_modules()), len(lie_two_algebras())
    ok = not bad and n_cm >= 20 and n_l2 >= 10 and "det3" in lie_two_algebras() and elapsed < 10
    say(1, ok, f"{len(structs)} structures ({n_cm} crossed, {n_l2} Lie-2), failures={bad}, {elapsed:.2f}s")
    assert ok


def test_criterion_02_construction_agreement(say):
    cms = crossed_modules()
    bad = [k for k, cm in cms.items()
           if not structures_equal(build_crossed_courant(cm), build_lie2_courant(crossed_to_lie2(cm)))]
    mods = modules_dim2()
    bad_mod = [name for name, _g, R in mods
               if not structures_equal(build_module_courant(R), build_lie2_courant(module_to_lie2(R)))]
    ok = not bad and not bad_mod
    say(2, ok, f"{len(cms)} crossed modules, {len(mods)} modules; mismatches={bad + bad_mod}")
    assert ok


def test_criterion_03_anchor_lemma(say):
    structs = _builder_structures()
    bad = [name for name, C in structs if not check_anchor_lemma(C).passed]
    say(3, not bad, f"{len(structs)} structures; failures={bad}")
    assert not bad


def test_criterion_04_complex_lie_biconditional(say):
    t0 = time.perf_counter()
    C, inst = _omni_instances()
    mismatches, verdicts = [], {}
    for name, data, J in inst:
        L = data.algebra()
        direct = check_lie(L).passed and check_complex_structure(data.D, L).passed
        generic = check_gcs_integrable(C, J).passed
        verdicts[name] = generic
        if direct != generic:
            mismatches.append(name)
    elapsed = time.perf_counter() - t0
    rot = [name for name, data, _ in inst if name.startswith("zero/") and data.D == ((0, -1), (1, 0))]
    aff_all_fail = not any(v for k, v in verdicts.items() if k.startswith("aff1/"))
    ok = (not mismatches and len(inst) == 20 and all(verdicts[r] for r in rot) and rot
          and aff_all_fail and elapsed < 60)
    say(4, bool(ok), f"{len(inst)} instances, mismatches={mismatches}, "
        f"integrable={sum(verdicts.values())}, aff1 all fail={aff_all_fail}, {elapsed:.2f}s")
    assert ok


def test_criterion_05_nijenhuis_equivalence(say):
    triples = nijenhuis_triples()
    small = [t for t in triples if t[1].dim <= 3 and t[2].dim <= 3]
    mismatches, pos, neg, aff_rot = [], 0, 0, False
    for name, g, R, D in triples:
        C, J = build_nijenhuis_gcs(g, R, D)
        integ = check_gcs_integrable(C, J).passed
        tz = is_zero(nijenhuis_tensor(D, g))
        if integ != tz:
            mismatches.append(name)
        pos += integ
        neg += not integ
        if name.startswith("triv1(aff1)") and D == ((0, -1), (1, 0)) and integ:
            aff_rot = True
    ok = not mismatches and len(small) >= 50 and aff_rot
    say(5, ok, f"{len(triples)} triples ({len(small)} with dims <= 3), integrable={pos}, "
        f"not={neg}, mismatches={mismatches}")
    assert ok


def test_criterion_06_induced_bracket(say):
    C, inst = _omni_instances()
    checked, bad = 0, []
    for name, data, J in inst:
        if check_gcs_integrable(C, J).passed:
            L = induced_bracket(C, J)
            checked += 1
            if not check_lie(L).passed or L.bracket != data.pi:
                bad.append(name)
    C4 = build_omni(4)
    d4 = OmniGCSData(*complex_aff1_realified())
    L4 = induced_bracket(C4, build_omni_gcs(4, d4))
    checked += 1
    if not check_lie(L4).passed or L4.bracket != d4.pi or is_zero(L4.bracket):
        bad.append("complex-aff1")
    for name, Cn, J in _integrable_nijenhuis():
        checked += 1
        if not check_lie(induced_bracket(Cn, J)).passed:
            bad.append(name)
    say(6, not bad, f"{checked} integrable J (incl. nonzero pi on dim V = 4); failures={bad}")
    assert not bad


def test_criterion_07_eigenspaces(say):
    C, inst = _omni_instances()
    integrable = [(n, C, J) for n, _d, J in inst if check_gcs_integrable(C, J).passed]
    integrable += _integrable_nijenhuis()
    bad = [n for n, Cx, J in integrable if not check_eigenbundle(Cx, J).passed]
    negatives = []
    for name, g, R, D in nijenhuis_triples():
        Cn, J = build_nijenhuis_gcs(g, R, D)
        if check_gcs_algebraic(Cn, J).passed and not check_gcs_integrable(Cn, J).passed:
            e = check_eigenbundle(Cn, J)["closed"]
            negatives.append((name, not e.passed and e.witness is not None))
    ok = not bad and len(negatives) >= 5 and all(x for _, x in negatives)
    say(7, ok, f"{len(integrable)} integrable J pass Dirac checks (failures={bad}); "
        f"{len(negatives)} non-integrable J with closure witnesses")
    assert ok


def test_criterion_08_equivalence_theorem(say):
    C, inst = _omni_instances()
    bad = []
    for name, data, _J in inst:
        N = scale(F(-1), right_multiplication(2, data.D))
        if not check_equivalence_theorem(2, data.pi, N, C)["agreement"].passed:
            bad.append(name)
        if not omni_integrability_conditions(2, data, N, C=C)["agreement"].passed:
            bad.append(name + " (conditions)")
    say(8, not bad, f"{len(inst)} instances; disagreements={bad}")
    assert not bad


def _verdicts(C, J):
    alg = check_gcs_algebraic(C, J)
    out = {"algebraic": alg.passed, "integrable": check_gcs_integrable(C, J).passed}
    if alg.passed:
        e = check_eigenbundle(C, J)
        out.update({c.check: c.passed for c in e.entries})
    return out


def test_criterion_09_transport(say):
    rng = random.Random(2024)
    C, inst = _omni_instances()
    before = {name: _verdicts(C, J) for name, _d, J in inst}
    gs = []
    while len(gs) < 20:
        g = tuple(tuple(F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(2)) for _ in range(2))
        if g[0][0] * g[1][1] != g[0][1] * g[1][0]:
            gs.append(g)
    not_auto, changed = [], []
    for k, g in enumerate(gs):
        T = omni_automorphism(2, g)
        if not check_automorphism(C, T).passed:
            not_auto.append(k)
            continue
        for name, _d, J in inst:
            J2 = transport_by_automorphism(C, T, J).J
            if _verdicts(C, J2) != before[name]:
                changed.append((k, name))
    accepted_random = sum(check_automorphism(C, random_invertible(C.dim_k, rng)).passed for _ in range(10))
    ok = not not_auto and not changed and accepted_random == 0
    say(9, ok, f"{len(gs)} automorphisms x {len(inst)} J; rejected={not_auto}, changed={changed[:3]}; "
        f"random T accepted={accepted_random}/10")
    assert ok


def _check_command(kind):
    return {"lie_algebra": ["check", "lie"], "crossed_module": ["check", "crossed-module"],
            "lie2": ["check", "lie2"], "representation": None, "omni_gcs": None,
            "ecourant": ["check", "ecourant"]}[kind]


def test_criterion_10_determinism(say, tmp_path, capsys):
    docs = corpus_documents()
    round_trip = all(serialize_document(parse_document(serialize_document(d))) == serialize_document(d)
                     for d in docs.values())
    omni2 = tmp_path / "omni-2.json"
    omni2.write_text(serialize_document(docs["omni-2"]))
    runs = []
    for name, doc in sorted(docs.items()):
        p = tmp_path / f"{name}.json"
        p.write_text(serialize_document(doc))
        cmd = _check_command(doc.kind)
        if cmd is not None:
            runs.append(cmd + [str(p)])
        if doc.kind == "crossed_module":
            runs.append(["construct", "crossed-courant", str(p)])
        if doc.kind == "lie2":
            runs.append(["construct", "lie2-courant", str(p)])
    for pi in ("zero", "aff1"):
        runs.append(["gcs-check", str(omni2), "--pi", pi, "--D", "rot2"])
        runs.append(["gcs-check", str(omni2), "--pi", pi, "--D", "rot2", "--report", "text"])
    outputs = []
    for _ in range(2):
        outs = []
        for argv in runs:
            code = run_command(argv)
            outs.append((code, capsys.readouterr().out))
        outputs.append(outs)
    identical = outputs[0] == outputs[1]
    ok = round_trip and identical and len(runs) > 50
    say(10, ok, f"{len(docs)} documents round-trip={round_trip}; {len(runs)} CLI runs identical={identical}")
    assert ok
