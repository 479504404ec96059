#!/usr/bin/env python3
"""
Setup Validation Script

Validates that the toolkit is usable on this machine before a long search:
- Settings load from the environment / .env
- Numerical stack (numpy, scipy) imports
- Counterexample dump directory is writable
- Sentry alerting configuration
- Reference states reproduce their known values

Usage:
    python scripts/validate_setup.py
    python scripts/validate_setup.py --fix  # create a missing dump directory
"""

import argparse
import sys
from datetime import datetime
from pathlib import Path
from typing import List

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))


class Colors:
    """ANSI color codes for terminal output"""
    GREEN = '\033[92m'
    YELLOW = '\033[93m'
    RED = '\033[91m'
    BLUE = '\033[94m'
    BOLD = '\033[1m'
    END = '\033[0m'


def print_header(text: str):
    """Print a section header"""
    print(f"\n{Colors.BOLD}{Colors.BLUE}{'='*60}{Colors.END}")
    print(f"{Colors.BOLD}{Colors.BLUE}  {text}{Colors.END}")
    print(f"{Colors.BOLD}{Colors.BLUE}{'='*60}{Colors.END}\n")


def print_check(name: str, passed: bool, message: str = ""):
    """Print a check result"""
    status = f"{Colors.GREEN}PASS{Colors.END}" if passed else f"{Colors.RED}FAIL{Colors.END}"
    print(f"  {status}  {name}")
    if message:
        print(f"        {Colors.YELLOW}{message}{Colors.END}")


def print_info(message: str):
    print(f"  {Colors.BLUE}info{Colors.END}  {message}")


class SetupValidator:
    """Runs each check and collects error messages"""

    def __init__(self, fix: bool = False):
        self.fix = fix
        self.errors: List[str] = []

    def check_settings(self) -> bool:
        try:
            from src.config import Settings

            s = Settings()
            print_check("Settings", True, f"environment={s.environment} workers={s.workers} chunk_size={s.chunk_size}")
            return True
        except Exception as e:
            self.errors.append(f"Settings: {e}")
            print_check("Settings", False, str(e))
            return False

    def check_numerical_stack(self) -> bool:
        try:
            import numpy
            import scipy

            print_check("Numerical stack", True, f"numpy {numpy.__version__}, scipy {scipy.__version__}")
            return True
        except ImportError as e:
            self.errors.append(f"Numerical stack: {e}")
            print_check("Numerical stack", False, str(e))
            return False

    def check_dump_dir(self, dump_dir=None) -> bool:
        from src.config import settings

        target = Path(dump_dir) if dump_dir is not None else settings.dump_dir
        if target is None:
            print_info("CQC_DUMP_DIR not set; counterexample candidates are logged only")
            return True

        if not target.exists() and self.fix:
            target.mkdir(parents=True, exist_ok=True)
            print_info(f"Created {target}")

        marker = target / ".write_check"
        try:
            marker.write_text("ok", encoding="utf-8")
            marker.unlink()
        except OSError as e:
            self.errors.append(f"Dump directory {target}: {e}")
            print_check("Dump directory", False, f"{target} is not writable (use --fix to create it)")
            return False

        print_check("Dump directory", True, str(target))
        return True

    def check_alerting(self) -> bool:
        from src.config import settings
        from src.utils.monitoring import SENTRY_AVAILABLE

        if not settings.sentry_dsn:
            print_info("CQC_SENTRY_DSN not set; alerting disabled")
            return True
        if not SENTRY_AVAILABLE:
            self.errors.append("CQC_SENTRY_DSN is set but sentry-sdk is not installed")
            print_check("Alerting", False, "sentry-sdk not installed")
            return False
        print_check("Alerting", True, "Sentry DSN configured")
        return True

    def check_reference_states(self) -> bool:
        """Werner(3/4, 1/2) with sigma_x/sigma_y and the qubit Bell state"""
        try:
            from src.quantum.bounds import evaluate
            from src.quantum.measurement import pauli_quadruple, standard_quadruple
            from src.quantum.states import bell_phi_plus, werner

            report = evaluate(werner(0.75, 0.5), pauli_quadruple("X", "Y"))
            bell = evaluate(bell_phi_plus(2), standard_quadruple(2, 2))
        except Exception as e:
            self.errors.append(f"Reference states: {e}")
            print_check("Reference states", False, str(e))
            return False

        ok = abs(report.qmi - 1.006607) < 1e-6 and abs(report.mi_sum - 0.912872) < 1e-6 and abs(bell.gap) < 1e-9
        if not ok:
            self.errors.append(f"Reference states: qmi={report.qmi:.6f} mi_sum={report.mi_sum:.6f} bell gap={bell.gap:.3g}")
        print_check("Reference states", ok, f"werner qmi={report.qmi:.6f} cqc_sum={report.mi_sum:.6f}")
        return ok

    def run_all_checks(self) -> bool:
        """Run all validation checks"""
        results = []

        print_header("Environment Configuration")
        results.append(self.check_settings())
        if not results[-1]:
            print(f"\n{Colors.RED}Cannot continue with invalid settings.{Colors.END}")
            return False
        results.append(self.check_numerical_stack())

        print_header("Outputs")
        results.append(self.check_dump_dir())
        results.append(self.check_alerting())

        print_header("Numerics")
        results.append(self.check_reference_states())

        print_header("Summary")
        passed = sum(results)
        total = len(results)
        if passed == total:
            print(f"{Colors.GREEN}{Colors.BOLD}All checks passed! ({passed}/{total}){Colors.END}")
            return True

        print(f"{Colors.YELLOW}{Colors.BOLD}Checks completed: {passed}/{total} passed{Colors.END}")
        for error in self.errors:
            print(f"  - {error}")
        return False


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Validate CQC toolkit setup")
    parser.add_argument("--fix", action="store_true", help="Create a missing dump directory")
    args = parser.parse_args(argv)

    print(f"  Timestamp: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
    print(f"  Working Directory: {Path.cwd()}")

    validator = SetupValidator(fix=args.fix)
    return 0 if validator.run_all_checks() else 1


if __name__ == "__main__":
    raise SystemExit(main())
