"""
Time integration of the 3D models under a prescribed flow.
"""
import logging
from typing import List, Optional

import numpy as np

from exceptions import RheoLabError, StepFailure
from kinematics import FlowProtocol
from models import SimRecord
from processing import RK4Integrator
from tensor_core import dev, determinant, smallest_eigenvalue, symmetric_part, SPD_FLOOR
from .model_interface import ConstitutiveModelInterface
from .state import ModelState

logger = logging.getLogger(__name__)

STRESS_NORMALIZATIONS = ("extra", "traceless")
DEFAULT_DET_TOLERANCE = 1e-3
DEFAULT_DET_WARNING = 1e-6


class Simulator:
    """
    Fixed-step RK4 driver for a constitutive model.

    The simulator owns nothing but its configuration; each ``run`` starts
    from its own state, so distinct runs may execute in parallel.
    """

    def __init__(self, model: ConstitutiveModelInterface, protocol: FlowProtocol,
                 det_tolerance: float = DEFAULT_DET_TOLERANCE,
                 det_warning: float = DEFAULT_DET_WARNING):
        """
        Initialize the simulator.

        Args:
            model: Constitutive model with its parameters
            protocol: Prescribed deformation history
            det_tolerance: Largest admissible |det B − 1| at a record
            det_warning: Drift above which a warning is logged once per run
        """
        self.model = model
        self.protocol = protocol
        self.det_tolerance = det_tolerance
        self.det_warning = det_warning
        self._warned = False

    def rate(self, t: float, y: np.ndarray) -> np.ndarray:
        """Right-hand side on the packed 12-component state vector."""
        try:
            state = ModelState.from_vector(y)
            return self.model.state_rate(state, self.protocol.velocity_gradient(t)).to_vector()
        except RheoLabError as e:
            raise StepFailure(t, str(e)) from e

    def record(self, t: float, state: ModelState, stress_normalization: str = "extra") -> SimRecord:
        """
        Evaluate the observables of ``state`` at time t.

        Raises:
            StepFailure: If a tensor is not SPD or its determinant drifted
        """
        dets = []
        for label, tensor in zip(self.model.state_labels, state.tensors()):
            lam_min = smallest_eigenvalue(tensor)
            if lam_min <= SPD_FLOOR:
                raise StepFailure(t, f"{label} lost positive definiteness (min eigenvalue {lam_min:.3e})")
            det = determinant(tensor)
            drift = abs(det - 1.0)
            if drift > self.det_tolerance:
                raise StepFailure(t, f"|det {label} - 1| = {drift:.3e} exceeds {self.det_tolerance:.1e}")
            if drift > self.det_warning and not self._warned:
                logger.warning("det %s drifted by %.3e at t=%.6g", label, drift, t)
                self._warned = True
            dets.append(det)

        rates = self.model.internal_rates(state)
        stress = self.model.extra_stress(state)
        stretching = symmetric_part(self.protocol.velocity_gradient(t))
        reported = dev(stress) if stress_normalization == "traceless" else stress
        return SimRecord(
            t=t,
            stress=reported,
            n1=stress.a11 - stress.a22,
            n2=stress.a22 - stress.a33,
            psi=self.model.stored_energy(state),
            xi=self.model.dissipation_rate(rates),
            det_a=dets[0],
            det_b=dets[1],
            stress_power=stress.dot(stretching),
        )

    def run(self, t_end: float, dt: float, record_every: int = 1,
            initial_state: Optional[ModelState] = None,
            stress_normalization: str = "extra") -> List[SimRecord]:
        """
        Integrate from t = 0 to t_end.

        Args:
            t_end: Final time (t_end ≥ 0)
            dt: Step size (> 0)
            record_every: Record stride in steps (≥ 1)
            initial_state: Start state; identities (virgin body) when None
            stress_normalization: "extra" reports S, "traceless" reports dev(S)

        Returns:
            List[SimRecord]: Records at steps 0, record_every, 2·record_every, ...

        Raises:
            StepFailure: If the state leaves the admissible set
        """
        if record_every < 1:
            raise ValueError(f"record_every must be at least 1, got {record_every}")
        if stress_normalization not in STRESS_NORMALIZATIONS:
            raise ValueError(f"stress_normalization must be one of {STRESS_NORMALIZATIONS}")
        state = initial_state or ModelState.virgin()
        records: List[SimRecord] = []
        self._warned = False

        def on_step(k: int, t: float, y: np.ndarray) -> None:
            if k % record_every == 0:
                try:
                    current = ModelState.from_vector(y)
                    records.append(self.record(t, current, stress_normalization))
                except StepFailure:
                    raise
                except RheoLabError as e:
                    raise StepFailure(t, str(e)) from e

        logger.info("model %d under %s: t_end=%g dt=%g", self.model.model_id, self.protocol, t_end, dt)
        RK4Integrator.integrate(self.rate, state.to_vector(), t_end, dt, callback=on_step)
        logger.info("model %d finished with %d records", self.model.model_id, len(records))
        return records


def simulate(model: ConstitutiveModelInterface, protocol: FlowProtocol, t_end: float, dt: float,
             record_every: int = 1, initial_state: Optional[ModelState] = None,
             stress_normalization: str = "extra",
             det_tolerance: float = DEFAULT_DET_TOLERANCE,
             det_warning: float = DEFAULT_DET_WARNING) -> List[SimRecord]:
    """Run ``Simulator(model, protocol).run(...)``."""
    simulator = Simulator(model, protocol, det_tolerance=det_tolerance, det_warning=det_warning)
    return simulator.run(t_end, dt, record_every=record_every, initial_state=initial_state,
                         stress_normalization=stress_normalization)


def stress_history(records: List[SimRecord]) -> np.ndarray:
    """Stacked stress components, shape (n_records, 6)."""
    return np.array([r.stress.components() for r in records])


