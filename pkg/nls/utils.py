import logging
import sys


# ANSI color codes for terminal output
class Colors:
    RESET = "\033[0m"
    BOLD = "\033[1m"

    # Foreground colors
    BLACK = "\033[30m"
    RED = "\033[31m"
    GREEN = "\033[32m"
    YELLOW = "\033[33m"
    CYAN = "\033[36m"
    WHITE = "\033[37m"

    # Background colors
    BG_RED = "\033[41m"
    BG_GREEN = "\033[42m"
    BG_BLUE = "\033[44m"


def configure_logging(level: str = "WARNING") -> None:
    """Route library logging to stderr at the given level."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _say(text: str = "") -> None:
    # stdout may carry CSV, so human-facing output goes to stderr
    print(text, file=sys.stderr)


def banner(text: str, background: str = Colors.BG_GREEN, foreground: str = Colors.BLACK) -> None:
    _say(f"\n{background}{foreground}{Colors.BOLD}--- {text} ---{Colors.RESET}")


def error_banner(text: str) -> None:
    _say(f"{Colors.BG_RED}{Colors.WHITE}{Colors.BOLD}ERROR: {text}{Colors.RESET}")


def display_summary(summary: dict, label: str = "Run Summary") -> None:
    """Display a result/stats/additional_info summary in a formatted way."""
    _say(f"\n{'-' * 10} {label} {'-' * 10}")
    for section in ("result", "stats", "additional_info"):
        entries = summary.get(section)
        if not entries:
            continue
        _say(f"{Colors.CYAN}{section}:{Colors.RESET}")
        for key, value in entries.items():
            shown = f"{value:.6e}" if isinstance(value, float) else value
            _say(f"  {key}: {shown}")
    _say("-" * (22 + len(label)))


def display_study(result) -> None:
    """Display convergence rows and fitted slopes."""
    _say(f"\n{'-' * 10} Convergence Study {'-' * 10}")
    for row in result.rows:
        marker = f"{Colors.RED}BLOW-UP{Colors.RESET}" if row.blew_up else f"{row.error:.4e}"
        _say(f"  {row.method.value:<13} tau={row.tau:<12.6g} error={marker}")
    for method, slope in result.slopes.items():
        shown = "n/a" if slope is None else f"{slope:.3f}"
        _say(f"{Colors.YELLOW}{Colors.BOLD}  slope({method}) = {shown}{Colors.RESET}")
    if result.reference_disagreement is not None:
        _say(f"  reference disagreement: {result.reference_disagreement:.4e}")
    _say("-" * 40)
