"""
Smoke test: check that pyqglass imports and runs in a fresh environment after pip install.
Needs no data files; builds a few small states and runs two subcommands end to end.
Usage: python scripts/smoke_test.py (from the project root, or after pip install .)
"""
import sys
import tempfile
from pathlib import Path


PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))


def main() -> int:
    errors = []

    # 1. import pyqglass
    try:
        import pyqglass
        print("[OK] import pyqglass")
    except ImportError as e:
        errors.append(f"import pyqglass failed: {e}")
        print(f"[FAIL] {errors[-1]}")
        return 1

    # 2. version
    ver = getattr(pyqglass, "__version__", None)
    if ver:
        print(f"[OK] pyqglass.__version__ = {ver}")
    else:
        print("[WARN] pyqglass.__version__ is not defined")

    # 3. core subpackages
    try:
        from pyqglass.lattice import CouplingDistribution, PairNeighborhood
        from pyqglass.models import CollectiveModel, lro_pair_state, pair_state
        from pyqglass.qmat import DensityMatrix, log_negativity
        from pyqglass.experiments import default_registry
        print("[OK] import qmat, lattice, models, experiments")
    except ImportError as e:
        errors.append(f"importing subpackages failed: {e}")
        print(f"[FAIL] {errors[-1]}")
        return 1

    # 4. a Bell state has one unit of log negativity
    try:
        import numpy as np

        bell = np.zeros(4, dtype=complex)
        bell[0] = bell[3] = 1.0 / np.sqrt(2.0)
        value = log_negativity(DensityMatrix.from_pure(bell))
        assert abs(value - 1.0) < 1e-12, value
        print("[OK] log_negativity(Bell) = 1")
    except Exception as e:
        errors.append(f"log negativity check failed: {e}")
        print(f"[FAIL] {errors[-1]}")
        return 1

    # 5. closed-form states
    try:
        pair_state(PairNeighborhood(1.0, (0.5, -0.3, 0.2), (0.1, 0.4, -0.7)), 2.0).check()
        lro_pair_state(CollectiveModel(20), 3.0).check()
        CouplingDistribution(0.0, 1.0)
        print("[OK] Edwards-Anderson and ordered-model pair states")
    except Exception as e:
        errors.append(f"building states failed: {e}")
        print(f"[FAIL] {errors[-1]}")
        return 1

    # 6. CLI end to end: ball estimate with manifest, then verify it
    try:
        from pyqglass.cli import main as cli_main

        assert sorted(default_registry().names())
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "ball.csv"
            assert cli_main(["ball", "--d", "6", "--out", str(target)]) == 0
            assert target.with_name("ball.manifest.json").exists()
            assert cli_main(["verify", str(target)]) == 0
        print("[OK] pyqglass ball --out + verify")
    except Exception as e:
        errors.append(f"CLI run failed: {e}")
        print(f"[FAIL] {errors[-1]}")
        import traceback

        traceback.print_exc()
        return 1

    print("\n[PASS] all smoke tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
