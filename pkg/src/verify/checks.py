"""
Cross-validation of the automata against the tree pair oracle
"""
from collections import Counter
from itertools import product
from typing import Optional, Sequence

import numpy as np

from .report import CheckRecorder, VerificationReport
from ..acceptor import (
    INTERIOR_ALPHABET,
    AcceptorBundle,
    get_acceptor,
    ogden_witness,
    pump_mutations,
    quasigeodesic_report,
)
from ..automata import audit_determinism, count_accepted
from ..multipliers import (
    MultiplierBundle,
    classify_x0,
    classify_x1,
    get_multipliers,
    multiplier_input,
    x0_case_patterns,
    x1_case_patterns,
)
from ..treecalc import (
    CARET_LETTERS,
    GENERATOR_NAMES,
    ball,
    common_expand,
    commutator,
    decode_interior,
    decode_pair,
    decode_tree,
    encode_interior,
    encode_pair,
    encode_tree,
    enumerate_reduced_pairs,
    enumerate_trees,
    evaluate,
    from_murray,
    generator,
    identity,
    inverse,
    is_reduced,
    multiply,
    placement_chart,
    placement_of,
    reduce,
    to_murray,
    union,
    x_n,
)
from ..treecalc.pairs import TreePair, canonical_generator
from ..utils.config import DEFAULT_SEED, MAX_CARETS, MAX_RADIUS, VERIFY_CONFIG
from ..utils.exceptions import ResourceLimitError
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

def _cap(field: str, value: int, cap: int) -> int:
    if value > cap:
        raise ResourceLimitError(field, value, cap)
    return value

def _finish(recorder: CheckRecorder):
    result = recorder.result()
    if result.passed:
        logger.info(f"Check {result.name}: passed ({result.checked} cases, {result.seconds}s)")
    else:
        logger.error(f"Check {result.name}: {result.failures} failures, e.g. {result.counterexample}")
    return result

def verify_acceptor(max_carets: Optional[int] = None,
                    acceptor: Optional[AcceptorBundle] = None) -> VerificationReport:
    """Acceptance of every encoded pair matches reducedness; accepted-word counts match."""
    max_carets = _cap("max_carets", max_carets or VERIFY_CONFIG["max_carets"], MAX_CARETS)
    acceptor = acceptor or get_acceptor()
    biconditional = CheckRecorder("acceptor-biconditional", max_carets=max_carets)
    counts = CheckRecorder("acceptor-count", max_carets=max_carets)
    for n in range(1, max_carets + 1):
        trees = enumerate_trees(n)
        reduced = 0
        for domain, range_tree in product(trees, trees):
            pair = TreePair(domain, range_tree)
            expected = is_reduced(pair)
            reduced += expected
            accepted = acceptor.f_machine.accepts(encode_pair(pair))
            biconditional.record(accepted == expected, pair.text(), n)
        counted = count_accepted(acceptor.f_machine, n)
        counts.record(counted == reduced, f"n={n}: {counted} accepted, {reduced} reduced", n)
        counts.details[str(n)] = counted
    return VerificationReport(checks=[_finish(biconditional), _finish(counts)])

def _mutate(text: str, rng: np.random.Generator) -> str:
    position = int(rng.integers(len(text)))
    while text[position] == ",":
        position = int(rng.integers(len(text)))
    choices = [letter for letter in CARET_LETTERS if letter != text[position]]
    return text[:position] + choices[int(rng.integers(len(choices)))] + text[position + 1:]

def verify_multiplier(name: str, max_carets: Optional[int] = None, wrong_samples: Optional[int] = None,
                      seed: int = DEFAULT_SEED,
                      multipliers: Optional[MultiplierBundle] = None) -> VerificationReport:
    """Exhaustive positives up to ``max_carets``, then seeded near-miss negatives."""
    max_carets = _cap("max_carets", max_carets or VERIFY_CONFIG["max_carets"], MAX_CARETS)
    wrong_samples = VERIFY_CONFIG["wrong_samples"] if wrong_samples is None else wrong_samples
    multipliers = multipliers or get_multipliers()
    machine = multipliers.for_generator(name)
    step = generator(name)
    canonical = canonical_generator(name)
    classify = {"x0": classify_x0, "x1": classify_x1}[canonical[:2]]
    inverted = canonical.endswith("inv")

    positives = CheckRecorder(f"multiplier-{name}-accepts", max_carets=max_carets)
    histogram = Counter()
    pool = []
    for n in range(1, max_carets + 1):
        for g in enumerate_reduced_pairs(n):
            h = multiply(g, step)
            pool.append((g, h))
            # h = g s^-1 means g = h s, so the forward case of h applies
            histogram[classify(h if inverted else g)] += 1
            positives.record(machine.accepts(multiplier_input(g, h)), f"{g.text()} -> {h.text()}", n)
    positives.details["cases"] = dict(sorted(histogram.items()))

    negatives = CheckRecorder(f"multiplier-{name}-rejects", samples=wrong_samples, seed=seed)
    rng = np.random.default_rng(seed)
    others = [other for other in GENERATOR_NAMES if other != name]
    kinds = Counter()
    for index in range(wrong_samples):
        g, h = pool[int(rng.integers(len(pool)))]
        kind = ("same", "other-generator", "mutation", "swapped")[index % 4]
        if kind == "same":
            u, v = g.text(), g.text()
        elif kind == "other-generator":
            wrong = multiply(g, generator(others[int(rng.integers(len(others)))]))
            u, v = g.text(), wrong.text()
        elif kind == "mutation":
            u, v = g.text(), _mutate(h.text(), rng)
        else:
            u, v = h.text(), g.text()
        if v == h.text() and u == g.text():
            continue
        kinds[kind] += 1
        rejected = not machine.accepts(multiplier_input(u, v))
        negatives.record(rejected, f"{u} -> {v}", g.size)
    negatives.details["kinds"] = dict(sorted(kinds.items()))
    return VerificationReport(seed=seed, checks=[_finish(positives), _finish(negatives)])

RELATORS = {
    "relator-1": lambda: commutator(evaluate(["x0", "x1inv"]), evaluate(["x0inv", "x1", "x0"])),
    "relator-2": lambda: commutator(evaluate(["x0", "x1inv"]), evaluate(["x0inv", "x0inv", "x1", "x0", "x0"])),
}

def verify_group_laws(radius: Optional[int] = None, samples: Optional[int] = None,
                      seed: int = DEFAULT_SEED) -> VerificationReport:
    radius = _cap("radius", VERIFY_CONFIG["radius"] if radius is None else radius, MAX_RADIUS)
    samples = VERIFY_CONFIG["associativity_samples"] if samples is None else samples
    one = identity()

    relations = CheckRecorder("group-relations")
    for label, build in RELATORS.items():
        value = build()
        relations.record(value == one, f"{label} = {value.text()}", value.size)
    left, right = multiply(x_n(2), x_n(1)), multiply(x_n(1), x_n(3))
    relations.record(left == right, f"x2 x1 = {left.text()} but x1 x3 = {right.text()}", left.size)

    elements = [entry.pair for entry in ball(radius).values()]
    laws = CheckRecorder("group-identity-inverse", radius=radius)
    for g in elements:
        laws.record(multiply(g, one) == g and multiply(one, g) == g, f"identity law at {g.text()}", g.size)
        laws.record(multiply(g, inverse(g)) == one, f"inverse law at {g.text()}", g.size)

    associativity = CheckRecorder("group-associativity", radius=radius, samples=samples, seed=seed)
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        a, b, c = (elements[int(i)] for i in rng.integers(len(elements), size=3))
        lhs = multiply(multiply(a, b), c)
        rhs = multiply(a, multiply(b, c))
        associativity.record(lhs == rhs, f"({a.text()}) ({b.text()}) ({c.text()})",
                             a.size + b.size + c.size)
    return VerificationReport(seed=seed, checks=[_finish(relations), _finish(laws), _finish(associativity)])

def _interior_words(max_length: int, accepts) -> list:
    words = [""]
    for length in range(1, max_length + 1):
        words.extend("".join(letters) for letters in product("()ab", repeat=length))
    return [word for word in words if accepts(word)]

def verify_roundtrips(max_carets: int = 10, interior_length: int = 8,
                      acceptor: Optional[AcceptorBundle] = None) -> VerificationReport:
    """Encodings are bijective: trees, interior subtrees, pairs, leaf labels and the placement chart."""
    max_carets = _cap("max_carets", max_carets, MAX_CARETS)
    acceptor = acceptor or get_acceptor()

    trees = CheckRecorder("roundtrip-trees", max_carets=max_carets)
    for n in range(1, max_carets + 1):
        for tree in enumerate_trees(n):
            word = encode_tree(tree)
            trees.record(len(word) == n and decode_tree(word) == tree, word, n)

    interiors = CheckRecorder("roundtrip-interior", max_length=interior_length)
    words = _interior_words(interior_length, acceptor.m_int.accepts)
    for word in words:
        ok = encode_interior(decode_interior(word)) == word and from_murray(to_murray(word)) == word
        interiors.record(ok, word, len(word))

    chart = placement_chart()
    placements = CheckRecorder("placement-chart", max_length=6)
    for word in (w for w in words if len(w) <= 6):
        if not word:
            continue
        node = decode_interior(word)
        for index in range(1, len(word)):
            expected = chart[(word[index - 1], word[index])]
            placements.record(placement_of(node, index) == expected, f"{word} at {index}", len(word))

    pairs = CheckRecorder("roundtrip-pairs", max_carets=min(max_carets, 5))
    for n in range(1, min(max_carets, 5) + 1):
        for pair in enumerate_reduced_pairs(n):
            pairs.record(decode_pair(encode_pair(pair)) == pair, pair.text(), n)

    expansions = CheckRecorder("expand-then-reduce", max_carets=min(max_carets, 4))
    extra = [tree for k in (1, 2, 3) for tree in enumerate_trees(k)]
    for n in range(1, min(max_carets, 4) + 1):
        for pair in enumerate_reduced_pairs(n):
            for tree in extra:
                expanded = common_expand(pair, union(pair.range, tree))
                expansions.record(reduce(expanded) == pair, f"{pair.text()} via {expanded.text()}", n)
    return VerificationReport(checks=[
        _finish(trees), _finish(interiors), _finish(placements), _finish(pairs), _finish(expansions)
    ])

def verify_case_partition(max_carets: Optional[int] = None,
                          multipliers: Optional[MultiplierBundle] = None) -> VerificationReport:
    """Each pair matches exactly one case template per generator, and it is the classified case."""
    max_carets = _cap("max_carets", max_carets or VERIFY_CONFIG["max_carets"], MAX_CARETS)
    multipliers = multipliers or get_multipliers()
    x0_patterns = x0_case_patterns()
    x1_patterns = x1_case_patterns()
    recorders = {
        "x0": CheckRecorder("case-partition-x0", max_carets=max_carets),
        "x1": CheckRecorder("case-partition-x1", max_carets=max_carets),
    }
    histograms = {"x0": Counter(), "x1": Counter()}
    for n in range(1, max_carets + 1):
        for g in enumerate_reduced_pairs(n):
            for name, patterns, classify in (("x0", x0_patterns, classify_x0), ("x1", x1_patterns, classify_x1)):
                word = multiplier_input(g, multiply(g, generator(name)))
                matched = [label for label, dfa in patterns.items() if dfa.accepts(word)]
                if name == "x1" and multipliers.case5b.accepts(word):
                    matched.append("5b")
                expected = classify(g)
                histograms[name][expected] += 1
                recorders[name].record(matched == [expected], f"{g.text()}: case {expected}, matched {matched}", n)
    for name, recorder in recorders.items():
        recorder.details["cases"] = dict(sorted(histograms[name].items()))
    return VerificationReport(checks=[_finish(recorders["x0"]), _finish(recorders["x1"])])

def verify_ogden(ps: Sequence[int] = (1, 2, 3), mutations: Optional[int] = None, seed: int = DEFAULT_SEED,
                 acceptor: Optional[AcceptorBundle] = None) -> VerificationReport:
    acceptor = acceptor or get_acceptor()
    mutations = VERIFY_CONFIG["ogden_mutations"] if mutations is None else mutations
    witnesses = CheckRecorder("ogden-witness", ps=list(ps))
    for p in ps:
        word = ogden_witness(p, acceptor)
        pair = decode_pair(word)
        witnesses.record(len(word) == 4 * p + 4 and is_reduced(pair), word.text(), p)
    pumped = CheckRecorder("ogden-pumping", p=2, mutations=mutations, seed=seed)
    for word in pump_mutations(2, mutations, seed, acceptor):
        pumped.record(not acceptor.f_machine.accepts(word), word.text(), len(word))
    return VerificationReport(seed=seed, checks=[_finish(witnesses), _finish(pumped)])

def verify_quasigeodesic(radius: Optional[int] = None, bound: Optional[float] = None,
                         acceptor: Optional[AcceptorBundle] = None) -> VerificationReport:
    """Every element of the ball is accepted; the fitted D is reported against ``bound``."""
    radius = _cap("radius", VERIFY_CONFIG["quasigeodesic_radius"] if radius is None else radius, MAX_RADIUS)
    bound = VERIFY_CONFIG["d_bound"] if bound is None else bound
    acceptor = acceptor or get_acceptor()
    membership = CheckRecorder("acceptor-ball", radius=radius)
    for key, entry in ball(radius).items():
        membership.record(acceptor.f_machine.accepts(encode_pair(entry.pair)), key, entry.pair.size)
    report = quasigeodesic_report(radius)
    fit = CheckRecorder("quasigeodesic", radius=radius, bound=bound)
    fit.record(True)
    fit.details.update(report.summary())
    fit.details["within_bound"] = report.holds(bound)
    if not report.holds(bound):
        logger.warning(f"Fitted D = {report.d_min:.4f} exceeds the reference bound {bound}")
    return VerificationReport(checks=[_finish(membership), _finish(fit)])

EXPECTED_COUNTERS = {"m_int": 1, "m_tree": 1, "f": 2, "l_x0": 2, "l_x1": 3, "l_x0inv": 2, "l_x1inv": 3}

def verify_determinism(acceptor: Optional[AcceptorBundle] = None,
                       multipliers: Optional[MultiplierBundle] = None) -> VerificationReport:
    acceptor = acceptor or get_acceptor()
    multipliers = multipliers or get_multipliers()
    machines = {**acceptor.machines(), **multipliers.machines(),
                "l_x0inv": multipliers.l_x0_inv, "l_x1inv": multipliers.l_x1_inv}
    audit = CheckRecorder("determinism-audit", machines=len(machines))
    counters = CheckRecorder("counter-counts")
    for name, machine in machines.items():
        violations = audit_determinism(machine)
        audit.record(not violations, f"{name}: {violations[:1]}", len(violations))
        if name in EXPECTED_COUNTERS:
            counters.record(machine.counters == EXPECTED_COUNTERS[name],
                            f"{name} has {machine.counters} counters", machine.counters)
            counters.details[name] = machine.counters
    return VerificationReport(checks=[_finish(audit), _finish(counters)])

def run_all(max_carets: Optional[int] = None, radius: Optional[int] = None,
            seed: Optional[int] = None, wrong_samples: Optional[int] = None,
            quasigeodesic_radius: Optional[int] = None) -> VerificationReport:
    """Every check at the configured (or given) bounds, merged by check name."""
    seed = VERIFY_CONFIG["seed"] if seed is None else seed
    logger.info(f"Running all checks (seed={seed})")
    report = VerificationReport(seed=seed)
    for part in (
        verify_determinism(),
        verify_acceptor(max_carets),
        verify_roundtrips(),
        verify_case_partition(max_carets),
        *(verify_multiplier(name, max_carets, wrong_samples, seed) for name in GENERATOR_NAMES),
        verify_group_laws(radius, seed=seed),
        verify_ogden(seed=seed),
        verify_quasigeodesic(quasigeodesic_radius),
    ):
        report = report.merge(part)
    logger.info(f"All checks: {'passed' if report.passed else 'FAILED'}")
    return report
