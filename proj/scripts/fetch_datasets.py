#!/usr/bin/env python3
"""Fetch the real datasets used by the sweep experiments.

iris.csv and ruspini.csv ship with the repository and are only verified here
(pinned sha256). The remaining sets are downloaded from the UCI archive into
data/raw/, recorded in data/raw/SHA256SUMS on first fetch (and verified
against that lockfile afterwards), then normalized into the loader's CSV
format: header row, numeric feature columns, trailing integer `label` column
with classes numbered in order of first appearance.
"""

import argparse
import hashlib
import sys
import urllib.error
import urllib.request
from pathlib import Path

UCI = "https://archive.ics.uci.edu/ml/machine-learning-databases"

BUNDLED = {
    "iris.csv": "874d28c2148c94ac8bed1b98ab1d93d27a473f72b2a712b06833f49b3259e54d",
    "ruspini.csv": "b29604aab87f06a4916f003f8d287cef74482a5993a6637edb37492ab121b9a2",
}


def sha256_of(path):
    return hashlib.sha256(path.read_bytes()).hexdigest()


def read_lockfile(path):
    pins = {}
    if path.exists():
        for line in path.read_text().splitlines():
            if line.strip():
                digest, name = line.split(None, 1)
                pins[name.strip()] = digest
    return pins


def write_lockfile(path, pins):
    lines = [f"{digest}  {name}" for name, digest in sorted(pins.items())]
    path.write_text("\n".join(lines) + "\n")


def download(url, dest):
    print(f"  downloading {url}")
    with urllib.request.urlopen(url, timeout=60) as resp:
        dest.write_bytes(resp.read())


def label_map(classes):
    seen = {}
    for c in classes:
        if c not in seen:
            seen[c] = len(seen)
    return seen


def write_csv(dest, header, rows):
    with dest.open("w", newline="") as f:
        f.write(",".join(header) + "\n")
        for row in rows:
            f.write(",".join(row) + "\n")
    print(f"  wrote {dest} ({len(rows)} rows)")


# --- converters: raw file(s) -> normalized csv ------------------------------

def conv_balance_scale(raws, dest):
    rows = [line.strip().split(",") for line in raws[0].read_text().splitlines() if line.strip()]
    labels = label_map(r[0] for r in rows)
    write_csv(dest, [f"f{i}" for i in range(4)] + ["label"],
              [r[1:] + [str(labels[r[0]])] for r in rows])


def conv_control_chart(raws, dest):
    rows = [line.split() for line in raws[0].read_text().splitlines() if line.strip()]
    # six pattern classes in fixed blocks of 100 rows
    write_csv(dest, [f"f{i}" for i in range(60)] + ["label"],
              [r + [str(i // 100)] for i, r in enumerate(rows)])


def conv_ecoli(raws, dest):
    rows = [line.split() for line in raws[0].read_text().splitlines() if line.strip()]
    labels = label_map(r[-1] for r in rows)
    write_csv(dest, [f"f{i}" for i in range(7)] + ["label"],
              [r[1:-1] + [str(labels[r[-1]])] for r in rows])  # drop sequence name


def conv_iris(raws, dest):
    rows = [line.strip().split(",") for line in raws[0].read_text().splitlines() if line.strip()]
    labels = label_map(r[-1] for r in rows)
    write_csv(dest, ["sepal_length", "sepal_width", "petal_length", "petal_width", "label"],
              [r[:-1] + [str(labels[r[-1]])] for r in rows])


def conv_karhunen(raws, dest):
    rows = [line.split() for line in raws[0].read_text().splitlines() if line.strip()]
    # ten digit classes in fixed blocks of 200 rows
    write_csv(dest, [f"f{i}" for i in range(64)] + ["label"],
              [r + [str(i // 200)] for i, r in enumerate(rows)])


def conv_sonar(raws, dest):
    rows = [line.strip().split(",") for line in raws[0].read_text().splitlines() if line.strip()]
    labels = label_map(r[-1] for r in rows)
    write_csv(dest, [f"f{i}" for i in range(60)] + ["label"],
              [r[:-1] + [str(labels[r[-1]])] for r in rows])


def conv_vehicle(raws, dest):
    rows = []
    for raw in raws:
        rows += [line.split() for line in raw.read_text().splitlines() if line.strip()]
    labels = label_map(r[-1] for r in rows)
    write_csv(dest, [f"f{i}" for i in range(18)] + ["label"],
              [r[:-1] + [str(labels[r[-1]])] for r in rows])


def conv_breast_cancer(raws, dest):
    rows = [line.strip().split(",") for line in raws[0].read_text().splitlines() if line.strip()]
    rows = [r for r in rows if "?" not in r]  # drop rows with missing values
    labels = label_map(r[-1] for r in rows)
    write_csv(dest, [f"f{i}" for i in range(9)] + ["label"],
              [r[1:-1] + [str(labels[r[-1]])] for r in rows])  # drop sample id


DATASETS = [
    {"name": "balance_scale", "files": [("balance-scale.data", f"{UCI}/balance-scale/balance-scale.data")],
     "convert": conv_balance_scale},
    {"name": "control_chart", "files": [("synthetic_control.data", f"{UCI}/synthetic_control-mld/synthetic_control.data")],
     "convert": conv_control_chart},
    {"name": "ecoli", "files": [("ecoli.data", f"{UCI}/ecoli/ecoli.data")],
     "convert": conv_ecoli},
    {"name": "iris", "files": [("iris.data", f"{UCI}/iris/iris.data")],
     "convert": conv_iris},
    {"name": "karhunen", "files": [("mfeat-kar", f"{UCI}/mfeat/mfeat-kar")],
     "convert": conv_karhunen},
    {"name": "sonar", "files": [("sonar.all-data", f"{UCI}/undocumented/connectionist-bench/sonar/sonar.all-data")],
     "convert": conv_sonar},
    {"name": "vehicle", "files": [(f"xa{c}.dat", f"{UCI}/statlog/vehicle/xa{c}.dat") for c in "abcdefghi"],
     "convert": conv_vehicle},
    {"name": "breast_cancer", "files": [("breast-cancer-wisconsin.data", f"{UCI}/breast-cancer-wisconsin/breast-cancer-wisconsin.data")],
     "convert": conv_breast_cancer},
    # gene-expression sets; no stable public mirror, so no automated fetch
    {"name": "yeast_galactose", "optional": True,
     "note": "Yeung et al. yeast galactose set (205 x 20, 4 classes); "
             "obtain from the authors' supplementary page and normalize by hand."},
    {"name": "cell_cycle", "optional": True,
     "note": "Yeung et al. cell cycle set (237 x 17, 4 classes); "
             "obtain from the authors' supplementary page and normalize by hand."},
]


def verify_bundled(data_dir):
    ok = True
    for name, digest in BUNDLED.items():
        path = data_dir / name
        if not path.exists():
            print(f"MISSING bundled file {path}")
            ok = False
        elif sha256_of(path) != digest:
            print(f"CHECKSUM MISMATCH for bundled file {path}")
            ok = False
        else:
            print(f"  verified {path}")
    return ok


def fetch_dataset(ds, data_dir, raw_dir, pins):
    dest = data_dir / f"{ds['name']}.csv"
    if dest.exists():
        print(f"  {dest} already present, skipping")
        return True
    raws = []
    for fname, url in ds["files"]:
        raw = raw_dir / fname
        if not raw.exists():
            try:
                download(url, raw)
            except (urllib.error.URLError, OSError) as e:
                print(f"  FAILED to download {url}: {e}")
                return False
        digest = sha256_of(raw)
        if fname in pins:
            if pins[fname] != digest:
                print(f"  CHECKSUM MISMATCH for {raw} (lockfile {pins[fname]}, got {digest})")
                return False
        else:
            pins[fname] = digest
            print(f"  pinned {fname} sha256={digest}")
        raws.append(raw)
    ds["convert"](raws, dest)
    return True


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dest", type=Path, default=Path(__file__).resolve().parent.parent / "data",
                        help="data directory (default: <repo>/data)")
    parser.add_argument("--only", nargs="*", metavar="NAME",
                        help="fetch only the named datasets")
    parser.add_argument("--include-optional", action="store_true",
                        help="also report the optional gene-expression sets")
    parser.add_argument("--verify-only", action="store_true",
                        help="verify bundled checksums and exit")
    args = parser.parse_args()

    data_dir = args.dest
    data_dir.mkdir(parents=True, exist_ok=True)
    if not verify_bundled(data_dir):
        return 1
    if args.verify_only:
        return 0

    raw_dir = data_dir / "raw"
    raw_dir.mkdir(exist_ok=True)
    lockfile = raw_dir / "SHA256SUMS"
    pins = read_lockfile(lockfile)

    failures = 0
    for ds in DATASETS:
        if args.only and ds["name"] not in args.only:
            continue
        if ds.get("optional") and not (args.include_optional or (args.only and ds["name"] in args.only)):
            continue
        print(f"{ds['name']}:")
        if "note" in ds:
            print(f"  optional, not fetched automatically: {ds['note']}")
            continue
        if not fetch_dataset(ds, data_dir, raw_dir, pins):
            failures += 1

    if pins:
        write_lockfile(lockfile, pins)
    if failures:
        print(f"{failures} dataset(s) failed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
