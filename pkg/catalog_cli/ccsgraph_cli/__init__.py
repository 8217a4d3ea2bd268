"""Command-line front end: group catalog, exporters and catalog sweeps."""
