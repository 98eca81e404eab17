class PlotError(Exception):
    """Unusable input: missing file, schema mismatch, bad hull text."""
