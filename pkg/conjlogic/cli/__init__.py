"""
Command-line front end for conjlogic
"""
from .commands import (
    CommandResult,
    build_parser,
    execute,
    main,
    parse_command,
    register_all_commands,
    run,
)
from .bench import BenchReport, run_bench

__all__ = [
    'CommandResult',
    'build_parser',
    'execute',
    'main',
    'parse_command',
    'register_all_commands',
    'run',
    'BenchReport',
    'run_bench',
]
