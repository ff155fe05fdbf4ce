from .base import RunSession, load_manifest, manifest_path, render_csv, render_json, verify_provenance

__all__ = ["RunSession", "load_manifest", "manifest_path", "render_csv", "render_json", "verify_provenance"]
