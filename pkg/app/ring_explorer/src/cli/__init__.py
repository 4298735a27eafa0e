from .main import build_parser, main, run  # noqa: F401
from .report import Report, emit_report  # noqa: F401
