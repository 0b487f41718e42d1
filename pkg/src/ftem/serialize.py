"""Text serialization of :class:`EmulatorGraph`.

Layout (sections in this order, one record per line)::

    # ftem emulator
    N <n>
    B <bucket size>
    SPANNER <count>
    u v w            (insertion order)
    EMULATOR <count>
    s t              (insertion order, s < t)
    WITNESS <count>
    u v : f1 f2 ...  (spanner order; empty list allowed)

A trailing ``BUCKETS`` section is accepted and ignored on read: buckets are
a function of the spanner order and ``B``.
"""
from __future__ import annotations

from .graph import EmulatorGraph, GraphFormatError, WeightedGraph, edge_key, format_weight


def dumps(H: EmulatorGraph) -> str:
    lines = ["# ftem emulator", f"N {H.n}", f"B {H.bucket_size}"]
    lines.append(f"SPANNER {len(H.spanner_edges)}")
    lines += [f"{u} {v} {format_weight(w)}" for u, v, w in H.spanner_edges]
    lines.append(f"EMULATOR {len(H.emulator_edges)}")
    lines += [f"{s} {t}" for s, t in H.emulator_edges]
    wit = [(u, v) for u, v, _ in H.spanner_edges if edge_key(u, v) in H.witness]
    lines.append(f"WITNESS {len(wit)}")
    for u, v in wit:
        F = H.witness[edge_key(u, v)]
        lines.append(f"{u} {v} :" + "".join(f" {x}" for x in F))
    return "\n".join(lines) + "\n"


def loads(text: str, base: WeightedGraph) -> EmulatorGraph:
    header: dict[str, int] = {}
    declared: dict[str, int] = {}
    section = None
    spanner, emulator, witness = [], [], {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, *rest = line.split()
        if head in ("N", "B") and section is None:
            header[head] = _int(rest[0] if rest else "", lineno)
            continue
        if head in ("SPANNER", "EMULATOR", "WITNESS", "BUCKETS"):
            section = head
            if head != "BUCKETS":
                declared[head] = _int(rest[0] if rest else "", lineno)
            continue
        try:
            if section == "SPANNER":
                u, v, w = line.split()
                spanner.append((int(u), int(v), float(w)))
            elif section == "EMULATOR":
                s, t = line.split()
                emulator.append((int(s), int(t)))
            elif section == "WITNESS":
                pair, _, faults = line.partition(":")
                u, v = pair.split()
                witness[edge_key(int(u), int(v))] = tuple(int(x) for x in faults.split())
            elif section == "BUCKETS":
                continue
            else:
                raise ValueError
        except ValueError:
            raise GraphFormatError(f"cannot parse {line!r}", lineno) from None
    if header.get("N") != base.n:
        raise GraphFormatError(f"emulator has N={header.get('N')} but base graph has n={base.n}")
    for name, got in (("SPANNER", spanner), ("EMULATOR", emulator), ("WITNESS", witness)):
        if declared.get(name, 0) != len(got):
            raise GraphFormatError(f"{name} declares {declared.get(name, 0)} records, found {len(got)}")
    H = EmulatorGraph(base, bucket_size=header.get("B", 1),
                      spanner_edges=spanner, emulator_edges=emulator)
    for key in witness:
        if not H.has_spanner_edge(*key):
            raise GraphFormatError(f"witness for non-spanner edge {key}")
    H.witness.update(witness)
    return H


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"expected integer, got {tok!r}", lineno) from None
