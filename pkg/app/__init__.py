"""Command-line layer: configuration, corpus loading, suite dispatch and reports."""
