import json
import os
import datetime

import pandas as pd
from retry import retry


def parse_range(text: str) -> list[int]:
    """Parse "2,3", "2-4" or a mix such as "1,3-5" into a sorted list of distinct integers.

    Args:
        text (str): The range text.

    Returns:
        list[int]: The values.
    """
    values = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            start, stop = (int(x) for x in part.split("-", 1))
            if stop < start:
                raise ValueError(f"Empty range {part!r}.")
            values.update(range(start, stop + 1))
        else:
            values.add(int(part))
    if not values:
        raise ValueError(f"Range {text!r} is empty.")
    return sorted(values)


def timestamp() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")


def check_writable(path: str) -> None:
    """Raise OSError unless `path` can be appended to. The file is created if missing."""
    directory = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(directory):
        raise OSError(f"Directory {directory} does not exist.")
    with open(path, "a"):
        pass


@retry(OSError, tries=3, delay=1, backoff=2)
def append_catalog(entry: dict, path: str) -> None:
    """Append one report to a catalog, one JSON document per line."""
    with open(path, "a") as f:
        f.write(json.dumps(entry) + "\n")


@retry(OSError, tries=3, delay=1, backoff=2)
def write_json(obj: dict, path: str) -> None:
    with open(path, "w") as f:
        json.dump(obj, f, indent=2)
        f.write("\n")


def read_catalog(path: str) -> pd.DataFrame:
    """Read a catalog into a flat frame; nested report fields become dotted columns such as "bns.empty"."""
    with open(path) as f:
        records = [json.loads(line) for line in f if line.strip()]
    return pd.json_normalize(records)


def summarize_catalog(df: pd.DataFrame) -> pd.DataFrame:
    """Count entries, BNS-empty verdicts and uniqueness passes per template and theorem region.

    Args:
        df (pd.DataFrame): A frame from `read_catalog`.

    Returns:
        pd.DataFrame: One row per (template, in_theorem).
    """
    if df.empty:
        return pd.DataFrame(columns=["template", "in_theorem", "entries", "bns_empty", "unique_pass"])
    return (
        df.assign(
            bns_empty=df["bns.empty"].fillna(False).astype(bool),
            unique_pass=df["uniqueness.passed"].fillna(False).astype(bool),
        )
        .groupby(["template", "in_theorem"], as_index=False)
        .agg(entries=("word", "size"), bns_empty=("bns_empty", "sum"), unique_pass=("unique_pass", "sum"))
    )
