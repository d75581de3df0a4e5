from .config import OutputFormat, MediumConfig, SweepConfig, RunConfig, parameter_names
from .output import Table, write_table
from .commands import cmd_classify, cmd_propagate, cmd_modes, cmd_verify, cmd_sweep
from .main import create_parser, main

__all__ = [
    OutputFormat.__name__,
    MediumConfig.__name__,
    SweepConfig.__name__,
    RunConfig.__name__,
    parameter_names.__name__,
    Table.__name__,
    write_table.__name__,
    cmd_classify.__name__,
    cmd_propagate.__name__,
    cmd_modes.__name__,
    cmd_verify.__name__,
    cmd_sweep.__name__,
    create_parser.__name__,
    main.__name__,
]
