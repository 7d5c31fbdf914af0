"""Command-line front end: task specs, reports, exporters."""
