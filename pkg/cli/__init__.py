"""Command-line front end: scenarios, commands, CSV output."""
from .scenario import Scenario, load_scenario, resolve_params
from .csv_writer import format_cell, render_csv, write_csv
from .commands import (
    CompileReport,
    CompareReport,
    cmd_simulate3d,
    cmd_simulate1d,
    cmd_compile,
    cmd_compare,
    cmd_moduli,
    scenario_coeffs,
)
from .app import RheoLabApp, build_parser, execute, run_scenario_file, main

__all__ = [
    'Scenario', 'load_scenario', 'resolve_params', 'format_cell', 'render_csv', 'write_csv',
    'CompileReport', 'CompareReport', 'cmd_simulate3d', 'cmd_simulate1d', 'cmd_compile',
    'cmd_compare', 'cmd_moduli', 'scenario_coeffs', 'RheoLabApp', 'build_parser', 'execute',
    'run_scenario_file', 'main',
]
