"""Seeded property suite behind `genbell verify`

Every property draws from its own generator, seeded from the run seed and the
property name, so a failure can be replayed alone with `--only`.
"""

from __future__ import annotations
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple
import logging
import zlib

import numpy as np
from rich.console import Console
from rich.progress import Progress

from genbell import gates, entanglement, thuemorse
from genbell.core import state as core_state
from genbell.core.operator import DenseOperator, kron, identity, apply_dense_raw
from genbell.core.sampling import random_state, random_product_state, random_real_unit_vector
from genbell.errors import DomainError

EXACT_TOL = 1e-12
PIPELINE_TOL = 1e-10

VERIFY_MIN_N = 2
VERIFY_MAX_N = 12
DENSE_CHECK_MAX_N = 10
UNITARY_CHECK_MAX_N = 8
THUE_MAX_EXPONENT = 16
THUE_DIAG_MAX_EXPONENT = 20
TAU_EXHAUSTIVE_EXPONENT = 16
SUPPORT_MAX_N = 10
GHZ_MAX_N = 10


@dataclass
class VerifyContext:
    seed: int
    max_n: int
    trials: int
    rng: np.random.Generator

    def ns(self, low: int = VERIFY_MIN_N, high: Optional[int] = None) -> List[int]:
        top = self.max_n if high is None else min(self.max_n, high)
        return list(range(low, top + 1))

    def cycle(self, ns: List[int]) -> Iterator[Tuple[int, int]]:
        """(trial, n) pairs cycling through the qubit counts"""
        for t in range(self.trials):
            yield t, ns[t % len(ns)]


@dataclass
class PropertyResult:
    """Outcome of one property over all its checks"""

    name: str
    checks: int = 0
    failures: int = 0
    worst: float = 0.0
    limit: float = 0.0
    failing_instance: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def check(self, residual: float, limit: float, instance: str) -> None:
        """Record one check, which passes when residual <= limit"""
        self.checks += 1
        self.limit = limit
        residual = float(residual)
        if residual > self.worst or np.isnan(residual):
            self.worst = residual
        if not residual <= limit:
            self.failures += 1
            if self.failing_instance is None:
                self.failing_instance = instance

    def summary(self) -> str:
        status = "pass" if self.passed else "fail"
        return (
            f"property={self.name} checks={self.checks} failures={self.failures} "
            f"worst={self.worst:.3e} limit={self.limit:.1e} status={status}"
        )


PropertyFn = Callable[[VerifyContext, PropertyResult], None]

PROPERTIES: Dict[str, PropertyFn] = {}


def prop(name: str) -> Callable[[PropertyFn], PropertyFn]:
    def register(fn: PropertyFn) -> PropertyFn:
        PROPERTIES[name] = fn
        return fn

    return register


def _unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def _max_diff(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b)))


def _instance(ctx: VerifyContext, name: str, trial: int, **extra: object) -> str:
    parts = [f"property={name}", f"seed={ctx.seed}", f"max_n={ctx.max_n}", f"trials={ctx.trials}", f"trial={trial}"]
    parts += [f"{k}={v}" for k, v in extra.items()]
    return " ".join(parts)


# core


@prop("tensor_associativity")
def _tensor_associativity(ctx: VerifyContext, res: PropertyResult) -> None:
    for t in range(ctx.trials):
        na, nb, nc = (int(x) for x in ctx.rng.integers(1, 4, size=3))
        a, b, c = random_state(na, ctx.rng), random_state(nb, ctx.rng), random_state(nc, ctx.rng)
        left = core_state.tensor_states(core_state.tensor_states(a, b), c)
        right = core_state.tensor_states(a, core_state.tensor_states(b, c))
        residual = _max_diff(left.amplitudes, right.amplitudes)
        res.check(residual, EXACT_TOL, _instance(ctx, res.name, t, sizes=(na, nb, nc)))


@prop("mixed_product")
def _mixed_product(ctx: VerifyContext, res: PropertyResult) -> None:
    for t in range(ctx.trials):
        na, nb = (int(x) for x in ctx.rng.integers(1, 4, size=2))
        big_a = DenseOperator(_unitary(1 << na, ctx.rng))
        big_b = DenseOperator(_unitary(1 << nb, ctx.rng))
        a, b = random_state(na, ctx.rng), random_state(nb, ctx.rng)
        left = apply_dense_raw(kron(big_a, big_b), core_state.tensor_states(a, b).amplitudes)
        right = np.kron(apply_dense_raw(big_a, a.amplitudes), apply_dense_raw(big_b, b.amplitudes))
        res.check(_max_diff(left, right), EXACT_TOL, _instance(ctx, res.name, t, sizes=(na, nb)))


@prop("conjugation_involution")
def _conjugation_involution(ctx: VerifyContext, res: PropertyResult) -> None:
    for t, n in ctx.cycle(ctx.ns()):
        s = random_state(n, ctx.rng)
        twice = core_state.conjugate_state(core_state.conjugate_state(s))
        res.check(_max_diff(twice.amplitudes, s.amplitudes), 0.0, _instance(ctx, res.name, t, n=n))


@prop("inner_norm")
def _inner_norm(ctx: VerifyContext, res: PropertyResult) -> None:
    for t, n in ctx.cycle(ctx.ns()):
        s = random_state(n, ctx.rng)
        value = core_state.inner(s, s)
        res.check(abs(value - 1.0), EXACT_TOL, _instance(ctx, res.name, t, n=n))


# gates


@prop("dense_implicit_agreement")
def _dense_implicit_agreement(ctx: VerifyContext, res: PropertyResult) -> None:
    for n in ctx.ns(high=DENSE_CHECK_MAX_N):
        oracles = {
            "cnot_gen": (gates.apply_cnot_gen, gates.dense(gates.GateTag(gates.GateKind.CNOT_GEN, n))),
            "walsh_head": (
                gates.apply_walsh_head,
                kron(gates.dense(gates.GateTag(gates.GateKind.WALSH, n - 1)), identity(1)),
            ),
            "m": (gates.apply_m, gates.dense(gates.GateTag(gates.GateKind.M, n))),
        }
        for t in range(ctx.trials):
            s = random_state(n, ctx.rng)
            for kernel, (implicit, op) in oracles.items():
                got = implicit(s).amplitudes
                want = apply_dense_raw(op, s.amplitudes)
                res.check(_max_diff(got, want), EXACT_TOL, _instance(ctx, res.name, t, n=n, kernel=kernel))


@prop("unitarity")
def _unitarity(ctx: VerifyContext, res: PropertyResult) -> None:
    for n in ctx.ns(high=UNITARY_CHECK_MAX_N):
        for kind in (gates.GateKind.CNOT_GEN, gates.GateKind.BELL, gates.GateKind.WALSH):
            u = gates.dense(gates.GateTag(kind, n)).matrix
            residual = _max_diff(u.conj().T @ u, np.eye(1 << n))
            res.check(residual, EXACT_TOL, _instance(ctx, res.name, 0, n=n, gate=kind.value))


@prop("cnot_involution")
def _cnot_involution(ctx: VerifyContext, res: PropertyResult) -> None:
    for t, n in ctx.cycle(ctx.ns()):
        s = random_state(n, ctx.rng)
        twice = gates.apply_cnot_gen(gates.apply_cnot_gen(s))
        res.check(_max_diff(twice.amplitudes, s.amplitudes), 0.0, _instance(ctx, res.name, t, n=n))


@prop("m_hermitian_real")
def _m_hermitian_real(ctx: VerifyContext, res: PropertyResult) -> None:
    for n in ctx.ns(high=UNITARY_CHECK_MAX_N):
        m = gates.dense(gates.GateTag(gates.GateKind.M, n)).matrix
        residual = max(float(np.max(np.abs(m.imag))), _max_diff(m, m.T))
        res.check(residual, 0.0, _instance(ctx, res.name, 0, n=n))


@prop("bell_column_structure")
def _bell_column_structure(ctx: VerifyContext, res: PropertyResult) -> None:
    for n in ctx.ns(high=DENSE_CHECK_MAX_N):
        magnitude = 2.0 ** (-(n - 1) / 2)
        for k in range(1 << n):
            amps = gates.bell_state(n, k).amplitudes
            nonzero = np.abs(amps) > EXACT_TOL
            count_off = abs(int(np.count_nonzero(nonzero)) - (1 << (n - 1)))
            mag_off = float(np.max(np.abs(np.abs(amps[nonzero]) - magnitude)))
            res.check(max(count_off, mag_off), EXACT_TOL, _instance(ctx, res.name, k, n=n, k=k))


@prop("l_matrix_bridge")
def _l_matrix_bridge(ctx: VerifyContext, res: PropertyResult) -> None:
    for n in ctx.ns(high=UNITARY_CHECK_MAX_N):
        b = gates.dense(gates.GateTag(gates.GateKind.BELL, n))
        m = gates.dense(gates.GateTag(gates.GateKind.M, n))
        product = (b.adjoint() @ m @ b).matrix
        diag = np.diag(product)
        off = float(np.max(np.abs(product - np.diag(diag))))
        closed = gates.l_matrix_diag(n)
        via_thue = thuemorse.l_diag_via_thue(n)
        residual = max(off, _max_diff(diag, closed), _max_diff(diag, via_thue))
        res.check(residual, EXACT_TOL, _instance(ctx, res.name, 0, n=n))


# entanglement


@prop("product_witness_zero")
def _product_witness_zero(ctx: VerifyContext, res: PropertyResult) -> None:
    for t, n in ctx.cycle(ctx.ns()):
        cut = 1 + t // len(ctx.ns()) % (n - 1)
        s = random_product_state(n, cut, ctx.rng)
        res.check(abs(entanglement.f_value(s)), PIPELINE_TOL, _instance(ctx, res.name, t, n=n, cut=cut))


@prop("witness_one_implies_maximal")
def _witness_one_implies_maximal(ctx: VerifyContext, res: PropertyResult) -> None:
    for t, n in ctx.cycle(ctx.ns()):
        k = int(ctx.rng.integers(0, 1 << n))
        theta = float(ctx.rng.uniform(0, 2 * np.pi))
        s = core_state.phase_rotate(gates.bell_state(n, k), theta)
        f_off = abs(abs(entanglement.f_value(s)) - 1.0)
        q_off = abs(entanglement.mw_measure(s) - 1.0)
        res.check(max(f_off, q_off), PIPELINE_TOL, _instance(ctx, res.name, t, n=n, k=k, theta=repr(theta)))


@prop("witness_bounded")
def _witness_bounded(ctx: VerifyContext, res: PropertyResult) -> None:
    for t, n in ctx.cycle(ctx.ns(high=DENSE_CHECK_MAX_N)):
        s = random_state(n, ctx.rng)
        over = max(0.0, abs(entanglement.f_value(s)) - 1.0)
        res.check(over, EXACT_TOL, _instance(ctx, res.name, t, n=n))


@prop("schmidt_purity_identity")
def _schmidt_purity_identity(ctx: VerifyContext, res: PropertyResult) -> None:
    for t, n in ctx.cycle(ctx.ns()):
        s = random_state(n, ctx.rng)
        for cut in range(1, n):
            mat = s.amplitudes.reshape(1 << cut, -1)
            rho_a = mat @ mat.conj().T
            dense_purity = float(np.real(np.trace(rho_a @ rho_a)))
            residual = abs(entanglement.schmidt(s, cut).purity() - dense_purity)
            res.check(residual, PIPELINE_TOL, _instance(ctx, res.name, t, n=n, cut=cut))


@prop("qubit_purity_equivalence")
def _qubit_purity_equivalence(ctx: VerifyContext, res: PropertyResult) -> None:
    for t, n in ctx.cycle(ctx.ns()):
        s = random_state(n, ctx.rng)
        for j in range(1, n + 1):
            moved = np.moveaxis(s.amplitudes.reshape([2] * n), j - 1, 0).reshape(-1)
            reordered = core_state.PureState(n, moved.copy())
            via_schmidt = entanglement.schmidt(reordered, 1).purity()
            direct = entanglement.purity(entanglement.reduced_density_qubit(s, j))
            res.check(abs(via_schmidt - direct), PIPELINE_TOL, _instance(ctx, res.name, t, n=n, qubit=j))


@prop("phase_invariance")
def _phase_invariance(ctx: VerifyContext, res: PropertyResult) -> None:
    for t, n in ctx.cycle(ctx.ns()):
        s = random_state(n, ctx.rng)
        theta = float(ctx.rng.uniform(0, 2 * np.pi))
        rotated = core_state.phase_rotate(s, theta)
        q_off = abs(entanglement.mw_measure(rotated) - entanglement.mw_measure(s))
        f_off = abs(abs(entanglement.f_value(rotated)) - abs(entanglement.f_value(s)))
        res.check(max(q_off, f_off), EXACT_TOL, _instance(ctx, res.name, t, n=n, theta=repr(theta)))


@prop("ghz_dichotomy")
def _ghz_dichotomy(ctx: VerifyContext, res: PropertyResult) -> None:
    ghz_2 = entanglement.ghz_state(2)
    bell_2 = gates.bell_state(2, 0)
    residual = max(abs(abs(entanglement.f_value(ghz_2)) - 1.0), _max_diff(ghz_2.amplitudes, bell_2.amplitudes))
    res.check(residual, EXACT_TOL, _instance(ctx, res.name, 0, n=2))
    for n in range(3, GHZ_MAX_N + 1):
        s = entanglement.ghz_state(n)
        res.check(abs(entanglement.f_value(s)), EXACT_TOL, _instance(ctx, res.name, 0, n=n, quantity="f"))
        res.check(abs(entanglement.mw_measure(s) - 1.0), PIPELINE_TOL, _instance(ctx, res.name, 0, n=n, quantity="q"))


@prop("bell_maximal")
def _bell_maximal(ctx: VerifyContext, res: PropertyResult) -> None:
    for n in ctx.ns():
        if n <= DENSE_CHECK_MAX_N:
            ks: Iterable[int] = range(1 << n)
        else:
            ks = (int(k) for k in ctx.rng.integers(0, 1 << n, size=min(ctx.trials, 50)))
        for k in ks:
            q = entanglement.mw_measure(gates.bell_state(n, k))
            res.check(abs(q - 1.0), PIPELINE_TOL, _instance(ctx, res.name, k, n=n, k=k))


@prop("witness_transfer")
def _witness_transfer(ctx: VerifyContext, res: PropertyResult) -> None:
    for t, n in ctx.cycle(ctx.ns()):
        phi = random_state(n, ctx.rng)
        via_l = entanglement.l_witness(phi)
        via_f = entanglement.f_value(gates.apply_bell(phi))
        res.check(abs(via_l - via_f), PIPELINE_TOL, _instance(ctx, res.name, t, n=n))


@prop("ghz_preimage")
def _ghz_preimage(ctx: VerifyContext, res: PropertyResult) -> None:
    for n in range(3, GHZ_MAX_N + 1):
        ghz = entanglement.ghz_state(n)
        phi = gates.apply_bell_adjoint(ghz)
        back = gates.apply_bell(phi)
        residual = max(
            abs(entanglement.l_witness(phi)),
            _max_diff(back.amplitudes, ghz.amplitudes),
            abs(entanglement.mw_measure(back) - 1.0),
        )
        res.check(residual, PIPELINE_TOL, _instance(ctx, res.name, 0, n=n))


@prop("sigma_y_antilinear")
def _sigma_y_antilinear(ctx: VerifyContext, res: PropertyResult) -> None:
    sigma_y = gates.PAULI_Y
    for t in range(ctx.trials):
        u = _unitary(2, ctx.rng)
        phi_1, phi_2 = u[:, 0], u[:, 1]
        single = abs(np.vdot(phi_1, sigma_y @ phi_1.conj()))
        cross = np.vdot(phi_1, sigma_y @ phi_2.conj())
        swapped = np.vdot(phi_2, sigma_y @ phi_1.conj())
        residual = max(single, abs(abs(cross) - 1.0), abs(cross + swapped))
        res.check(residual, EXACT_TOL, _instance(ctx, res.name, t))


# thuemorse


@prop("tau_recursion")
def _tau_recursion(ctx: VerifyContext, res: PropertyResult) -> None:
    top = 1 << TAU_EXHAUSTIVE_EXPONENT
    fast = thuemorse.tau_array(np.arange(1, top + 1))
    for i in range(1, top + 1):
        expected = thuemorse.tau_recursive(i)
        residual = abs(int(fast[i - 1]) - expected) + abs(thuemorse.tau(i) - expected)
        res.check(residual, 0.0, _instance(ctx, res.name, i, i=i))


@prop("block_negation")
def _block_negation(ctx: VerifyContext, res: PropertyResult) -> None:
    for n in range(1, THUE_MAX_EXPONENT + 1):
        ok = thuemorse.block_negation_check(n)
        classes = thuemorse.evil_odious_indices(n)
        sizes_off = abs(len(classes.evil) - (1 << (n - 1))) + abs(len(classes.odious) - (1 << (n - 1)))
        res.check((0 if ok else 1) + sizes_off, 0.0, _instance(ctx, res.name, 0, n=n))


@prop("l_diag_equality")
def _l_diag_equality(ctx: VerifyContext, res: PropertyResult) -> None:
    for n in range(1, THUE_DIAG_MAX_EXPONENT + 1):
        residual = _max_diff(thuemorse.l_diag_via_thue(n), gates.l_matrix_diag(n))
        res.check(residual, 0.0, _instance(ctx, res.name, 0, n=n))


@prop("evil_odious_support")
def _evil_odious_support(ctx: VerifyContext, res: PropertyResult) -> None:
    ns = list(range(2, SUPPORT_MAX_N + 1))
    for t, n in ctx.cycle(ns):
        classes = thuemorse.evil_odious_indices(n)
        side = classes.evil if t % 2 == 0 else classes.odious
        x = random_real_unit_vector(1 << n, ctx.rng, support=side - 1)
        report = thuemorse.real_support_criterion(x)
        label = "evil" if t % 2 == 0 else "odious"
        res.check(abs(report.value - 1.0), EXACT_TOL, _instance(ctx, res.name, t, n=n, side=label))

        mixed = random_real_unit_vector(1 << n, ctx.rng)
        squares = mixed * mixed
        if squares[classes.evil - 1].sum() < 1e-3 or squares[classes.odious - 1].sum() < 1e-3:
            continue
        report = thuemorse.real_support_criterion(mixed)
        over = max(0.0, report.value - (1.0 - 1e-6))
        wrong_class = 0.0 if report.classification == thuemorse.SupportClass.MIXED else 1.0
        res.check(over + wrong_class, 0.0, _instance(ctx, res.name, t, n=n, side="mixed"))


@prop("evil_support_maximal")
def _evil_support_maximal(ctx: VerifyContext, res: PropertyResult) -> None:
    ns = list(range(2, min(ctx.max_n, SUPPORT_MAX_N) + 1))
    for t, n in ctx.cycle(ns):
        classes = thuemorse.evil_odious_indices(n)
        side = classes.evil if t % 2 == 0 else classes.odious
        x = random_real_unit_vector(1 << n, ctx.rng, support=side - 1)
        q = entanglement.mw_measure(gates.apply_bell(core_state.PureState(n, x.astype(np.complex128))))
        res.check(abs(q - 1.0), PIPELINE_TOL, _instance(ctx, res.name, t, n=n))


def property_names() -> List[str]:
    return list(PROPERTIES)


def run_property(name: str, seed: int, max_n: int, trials: int) -> PropertyResult:
    """Run a single property with its own generator

    Args:
        name (str): Property name
        seed (int): Run seed
        max_n (int): Largest qubit count for the sampled checks
        trials (int): Random trials

    Returns:
        PropertyResult: The outcome
    """
    if name not in PROPERTIES:
        raise DomainError(f"unknown property '{name}'")
    rng = np.random.default_rng([seed, zlib.crc32(name.encode())])
    ctx = VerifyContext(seed, max_n, trials, rng)
    res = PropertyResult(name)
    PROPERTIES[name](ctx, res)
    logging.info(res.summary())
    return res


def run_suite(
    seed: int,
    max_n: int,
    trials: int,
    only: Optional[List[str]] = None,
    progress: bool = False,
) -> List[PropertyResult]:
    """Run every registered property, or the ones named in `only`

    Args:
        seed (int): Run seed
        max_n (int): Largest qubit count, 2 <= max_n <= 12
        trials (int): Random trials per property
        only (Optional[List[str]], optional): Names to restrict to. Defaults to None.
        progress (bool, optional): Whether to show a progress bar on stderr. Defaults to False.

    Returns:
        List[PropertyResult]: One result per property, in registration order
    """
    if not VERIFY_MIN_N <= max_n <= VERIFY_MAX_N:
        raise DomainError(f"max_n must be within {VERIFY_MIN_N}..{VERIFY_MAX_N}, got {max_n}")
    if trials < 1:
        raise DomainError(f"trials must be positive, got {trials}")

    names = property_names()
    if only:
        for name in only:
            if name not in PROPERTIES:
                raise DomainError(f"unknown property '{name}'")
        names = [name for name in names if name in only]

    results = []
    if not progress:
        for name in names:
            results.append(run_property(name, seed, max_n, trials))
        return results

    with Progress(console=Console(stderr=True), transient=True) as bar:
        task = bar.add_task("verifying", total=len(names))
        for name in names:
            bar.update(task, description=name)
            results.append(run_property(name, seed, max_n, trials))
            bar.advance(task)
    return results
