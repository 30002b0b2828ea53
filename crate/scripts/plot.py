"""Plot pairswap CSV output.

Time series give N and U against t; phase diagrams give N against U with
the frontier overlay. Usage: python scripts/plot.py FILE.csv [...] [-o out.png]
"""

import argparse

import matplotlib.pyplot as plt
import numpy as np


def read(path):
    header = {}
    with open(path) as f:
        for line in f:
            if not line.startswith("#"):
                break
            key, _, value = line[1:].partition("=")
            header[key.strip()] = value.strip()
    data = np.genfromtxt(path, delimiter=",", skip_header=len(header), names=True)
    return header, data


def label(header):
    keys = ["theta", "g-aa", "g-bb", "kappa-a", "kappa-b"]
    return ", ".join(f"{k}={float(header[k]):.4g}" for k in keys)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("files", nargs="+")
    parser.add_argument("-o", "--output")
    args = parser.parse_args()

    fig, ax = plt.subplots(figsize=(6, 4.5))
    for path in args.files:
        header, d = read(path)
        if header["mode"] == "timeseries":
            ax.plot(d["t"], d["N"], label=f"N ({label(header)})")
            ax.plot(d["t"], d["U"], "--", label=f"U ({label(header)})")
            ax.set_xlabel("t")
        else:
            traj = d[d["frontier"] == 0]
            ax.plot(traj["U"], traj["N"], ".", ms=1.5, label=label(header))
            edge = d[d["frontier"] == 1]
            ax.plot(edge["U"], edge["N"], "k-", lw=1)
            ax.set_xlabel("U")
            ax.set_ylabel("N")
    ax.legend(fontsize="x-small")
    fig.tight_layout()
    if args.output:
        fig.savefig(args.output, dpi=150)
    else:
        plt.show()


if __name__ == "__main__":
    main()
