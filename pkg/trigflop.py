import argparse
import sys
import time
from typing import List, Optional


def parse_config_override(argv: List[str]) -> Optional[str]:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--config_override", type=str)
    known, _ = parser.parse_known_args(argv)
    return known.config_override


def apply_override(path: str) -> int:
    from config.loader import apply_config_overrides, load_config_override
    from event_logging.event_logger import event_print
    import config.config as config_module

    try:
        overrides = load_config_override(path)
        applied = apply_config_overrides(config_module, overrides)
    except Exception as e:
        event_print(f"[CONFIG] Error loading config override: {e}")
        return 2
    for key, (old, new) in applied.items():
        event_print(f"[CONFIG] {key}: {old} -> {new}")
    event_print(f"[CONFIG] Applied overrides from: {path}")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv

    override = parse_config_override(argv)
    if override:
        status = apply_override(override)
        if status:
            return status

    import config.config as config
    from cli.commands import EXIT_USAGE, build_parser
    from event_logging.event_logger import LogType, event_print, log_json_entry, set_start_time
    from utils.errors import TrigflopError

    set_start_time(time.time())
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE

    log_json_entry(LogType.SESSION_START, {"command": args.command, "argv": argv}, config.OUTPUT_FOLDER)
    try:
        return args.func(args)
    except TrigflopError as e:
        event_print(f"error: {e}", LogType.ERROR, {"command": args.command})
        return EXIT_USAGE
    except Exception as e:
        event_print(f"unexpected error: {e!r}", LogType.ERROR, {"command": args.command})
        raise


if __name__ == "__main__":
    sys.exit(main())
