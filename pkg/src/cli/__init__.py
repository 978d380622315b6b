"""Command-line surface: sub-commands, run reports and the acceptance driver."""
