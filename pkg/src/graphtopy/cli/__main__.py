"""
graphtopy CLI - 그래프 zeta, covering, G-set 호모토피 계산 도구.

사용법:
    graphtopy zeta graph.json --terms 5
    graphtopy weq cal_d0.json cal_d1.json
    graphtopy demo theorem-4-9 --format json

종료 코드: 0 성공, 1 부정 판정, 2 입력 오류.
"""

from __future__ import annotations

import argparse
import sys
import uuid

from graphtopy.core.config import CountingLimits, settings
from graphtopy.core.errors import GraphtopyError
from graphtopy.core.logging import (
    clear_logging_context,
    get_logger,
    set_command_context,
    setup_logging,
)

from .commands import COMMANDS
from .utils import print_error

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2

logger = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphtopy",
        description="Counting homotopy of graphs: zeta functions, coverings, G-sets",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "--format",
        choices=["json", "text"],
        default="text",
        help="Output format (default text)",
    )
    parser.add_argument(
        "--verbose", action="store_true", help="Debug logging on stderr"
    )

    subparsers = parser.add_subparsers(dest="command", metavar="command")
    for verb, (module, help_text) in COMMANDS.items():
        module.setup_parser(subparsers.add_parser(verb, help=help_text))
    return parser


def main_with_args(argv: list[str] | None = None) -> int:
    """명령줄 인자를 처리하는 메인 함수."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_INPUT

    setup_logging(
        log_level="DEBUG" if args.verbose else settings.log_level,
        environment=settings.ENVIRONMENT,
        enable_json=settings.LOG_JSON,
    )
    set_command_context(args.command, run_id=uuid.uuid4().hex[:8])
    limits = CountingLimits(OUTPUT_FORMAT=args.format)
    module, _ = COMMANDS[args.command]
    try:
        code = module.execute(args, limits)
        logger.info("Command finished", exit_code=code)
        return code
    except GraphtopyError as e:
        logger.info("Command rejected input", code=e.code)
        print_error(str(e))
        return EXIT_INPUT
    finally:
        clear_logging_context()


def main() -> int:
    """메인 진입점."""
    try:
        return main_with_args()
    except KeyboardInterrupt:
        print_error("사용자에 의해 중단되었습니다.")
        return 130


if __name__ == "__main__":
    sys.exit(main())
