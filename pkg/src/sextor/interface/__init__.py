"""Command line, fixture files and report rendering."""
