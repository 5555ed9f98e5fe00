"""Signal file reading and writing."""

from qpdt_cli.io.signal_file import SignalFormat, read_signal, write_signal

__all__ = ["SignalFormat", "read_signal", "write_signal"]
