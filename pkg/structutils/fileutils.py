import io
import json
import sys
import chardet

from typing import Any, Optional, TextIO
from .errors import InputError, StructError

SCHEMA_VERSION: int = 1


def get_file_encoding(path: str) -> str:
    """Get encoding of file

    Argument
      path: file path
    Returns
      encoding string
    """
    try:
        with open(path, "rb") as f:
            enc = chardet.detect(f.read())['encoding']
    except (IOError, KeyError):
        enc = None
    return enc or 'utf-8'


def load_json_text(text: str) -> Any:
    """Parse JSON text, turning syntax errors into input errors"""
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON: {e.msg}", line=e.lineno)


def read_json(path: str) -> Any:
    """Read a JSON file using its detected encoding

    Argument
      path: file path
    Returns
      the parsed document
    """
    with open(path, "r", encoding=get_file_encoding(path)) as f:
        return load_json_text(f.read())


def dump_json(obj: Any) -> str:
    """Serialize a JSON document in the one layout this project writes

    Keys are sorted so equal documents give equal bytes.
    """
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def stamp(obj: dict) -> dict:
    """Add the schema version to a document"""
    d = dict(obj)
    d['schema_version'] = SCHEMA_VERSION
    return d


def stdout_utf8() -> TextIO:
    return io.TextIOWrapper(sys.stdout.buffer, encoding='utf-8',
                            errors='ignore')


def open_out(path: Optional[str]) -> TextIO:
    """Open the output file, or stdout when no path is given"""
    if path is None:
        return stdout_utf8()
    return open(path, "w", encoding='utf-8', errors='ignore')


def print_error(e: Exception, file: TextIO = sys.stderr):
    """Print the machine-readable error object of an exception"""
    if isinstance(e, StructError):
        obj = e.to_dict()
    elif isinstance(e, IOError):
        obj = {'error': "io", 'message': str(e)}
    else:
        obj = {'error': "error", 'message': str(e)}
    print(json.dumps(obj, sort_keys=True, ensure_ascii=False), file=file)
