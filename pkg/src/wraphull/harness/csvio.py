"""Fixed CSV schemas for experiment outputs plus the run manifest.

Formatting is deterministic (no timestamps, stable float rendering), so
rerunning an experiment with the same config produces byte-identical
files; that property is part of the reproducibility contract.
"""

import os

from ..errors import ValidationError

ESTIMATE_HEADER = "class,r,lambda,n,n_boundary,n_interior,n_isolated,hull_area,estimate_kind,value"
TABLE1_HEADER = (
    "r,n,mean_n_interior,mean_n_boundary,mean_n_isolated,"
    "rmse_oracle,rmse_data_driven,ratio,se_oracle,se_data_driven"
)
TABLE2_HEADER = "n,mean_r_hat,rmse_adaptive,se"
PI_HEADER = "n,rmse_naive,rmse_opt"
EFRON_HEADER = "lambda,reps,mean_n_boundary,lambda_mean_missing,z,pass"
POLYTOPE_HEADER = "k,lambda,mse,bound,ratio"

_SCHEMAS = {
    "estimate": ESTIMATE_HEADER,
    "table1": TABLE1_HEADER,
    "table2": TABLE2_HEADER,
    "pi": PI_HEADER,
    "efron": EFRON_HEADER,
    "polytope": POLYTOPE_HEADER,
}


def format_value(v):
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def format_row(schema, row):
    """One CSV line for a dict keyed by the schema's column names."""
    header = _SCHEMAS[schema]
    cols = header.split(",")
    missing = [c for c in cols if c not in row]
    if missing:
        raise ValidationError(f"row is missing columns {missing} for schema {schema!r}")
    return ",".join(format_value(row[c]) for c in cols)


def write_rows(path, schema, rows):
    header = _SCHEMAS[schema]
    lines = [header]
    lines.extend(format_row(schema, r) for r in rows)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def write_manifest(path, config):
    """Plain key=value lines, sorted by key, one per config entry."""
    lines = []
    for key in sorted(config):
        value = config[key]
        if isinstance(value, (list, tuple)):
            value = ",".join(format_value(v) for v in value)
        else:
            value = format_value(value)
        lines.append(f"{key}={value}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def manifest_path_for(csv_path):
    base, _ = os.path.splitext(csv_path)
    return base + ".manifest.txt"
