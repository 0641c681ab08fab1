from .manifest import MANIFEST_NAME, Manifest, load_manifest, write_manifest
from .plots import emit_plot_script
from .writers import path_csv_name, strong_error_csv_name, write_csv

__all__ = [
    "MANIFEST_NAME",
    "Manifest",
    "emit_plot_script",
    "load_manifest",
    "path_csv_name",
    "strong_error_csv_name",
    "write_csv",
    "write_manifest",
]
