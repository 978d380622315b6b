"""Set-Ramsey numbers: monochromatic subgraph detection, exhaustive search and bounds."""
