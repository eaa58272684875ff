"""Atomic file writes.

Content goes to a temporary sibling first and is renamed over the target,
so readers never see a partially written file.
"""

from pathlib import Path


def atomic_write_text(file_path: Path, text: str) -> None:
    """Write text to ``file_path`` atomically using temp file + rename.

    Args:
        file_path: Target file; parent directories are created
        text: Full file content, written as UTF-8 with LF line endings

    Raises:
        OSError: If the directory or file cannot be written
    """
    file_path.parent.mkdir(parents=True, exist_ok=True)
    temp_file = file_path.with_name(file_path.name + ".tmp")
    with open(temp_file, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    temp_file.replace(file_path)
