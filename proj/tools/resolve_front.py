"""Front word -> exact rational (q, p) polyline whose Legendrian lift has that front.

Strand at position j sits at slope -j away from events; events are realized by
local slope profiles.  Usage: resolve_front.py FRONTFILE > POLYLINE
"""
import sys
from fractions import Fraction as F

def parse(text):
    ev = []; orient = (0, 'up')
    for line in text.splitlines():
        line = line.split('#')[0].split()
        if not line or line[0] == 'front': continue
        if line[0] == 'orient': orient = (int(line[1]) - 1, line[2]); continue
        ev.append((line[0], int(line[1])))
    return ev, orient

def integ(prof, a, b):
    """Integral of piecewise-linear p over [a,b] (prof sorted by q)."""
    s = F(0)
    for (q1, p1), (q2, p2) in zip(prof, prof[1:]):
        lo, hi = max(a, q1), min(b, q2)
        if hi <= lo: continue
        def at(q): return p1 + (p2 - p1) * (q - q1) / (q2 - q1)
        s += (at(lo) + at(hi)) / 2 * (hi - lo)
    return s

def build(ev):
    # state: list of strand records, index = position-1; each has 'u' at current q
    q = F(0)
    strands = []          # current strands: dict(id, u)
    pieces = {}           # (event, 'in', pos) or (event, 'out', pos) -> profile
    slots = []
    for e, (kind, i) in enumerate(ev):
        n = len(strands)
        q0 = q
        profs_in = {}    # left position -> (profile, right position or None)
        if kind == 'L':
            for j in range(1, n + 1):
                if j < i: profs_in[j] = ([(q0, F(-j)), (q0 + 2, F(-j))], j)
                else: profs_in[j] = ([(q0, F(-j)), (q0 + 1, F(-(j + 2))), (q0 + 2, F(-(j + 2)))], j + 2)
            qc, pc = q0 + 1, -F(2 * i + 1, 2)
            up = [(qc, pc), (q0 + 2, F(-i))]
            lo = [(qc, pc), (q0 + 2, F(-(i + 1)))]
            # birth height between neighbours at qc
            def u_at(j):
                prof, _ = profs_in[j]
                return strands[j - 1]['u'] + integ(prof, q0, qc)
            above = u_at(i - 1) if i - 1 >= 1 else None
            below = u_at(i) if i <= n else None
            if above is not None and below is not None: h = (above + below) / 2
            elif above is not None: h = above - 1
            elif below is not None: h = below + 1
            else: h = F(0)
            width = F(2)
            new = []
            for j in range(1, n + 1):
                prof, r = profs_in[j]
                new.append((r, {'u': strands[j - 1]['u'] + integ(prof, q0, q0 + width)}, ('in', j)))
            new.append((i, {'u': h + integ(up, qc, q0 + width)}, ('cusp', 'up')))
            new.append((i + 1, {'u': h + integ(lo, qc, q0 + width)}, ('cusp', 'lo')))
            slots.append({'kind': 'L', 'i': i, 'in': profs_in, 'cusp': (qc, pc), 'up': up, 'lo': lo})
        elif kind == 'R':
            G = strands[i - 1]['u'] - strands[i]['u']
            assert G > 0, (e, G)
            w = 4 * G
            qc, pc = q0 + w, -F(2 * i + 1, 2)
            width = w + 1
            for j in range(1, n + 1):
                if j < i: profs_in[j] = ([(q0, F(-j)), (q0 + width, F(-j))], j)
                elif j == i: profs_in[j] = ([(q0, F(-i)), (q0 + w / 2, -F(4 * i + 7, 4)), (qc, pc)], None)
                elif j == i + 1: profs_in[j] = ([(q0, F(-(i + 1))), (qc, pc)], None)
                else: profs_in[j] = ([(q0, F(-j)), (qc, F(-j)), (q0 + width, F(-(j - 2)))], j - 2)
            new = []
            for j in range(1, n + 1):
                prof, r = profs_in[j]
                if r is None: continue
                new.append((r, {'u': strands[j - 1]['u'] + integ(prof, q0, q0 + width)}, ('in', j)))
            ua = strands[i - 1]['u'] + integ(profs_in[i][0], q0, qc)
            ub = strands[i]['u'] + integ(profs_in[i + 1][0], q0, qc)
            assert ua == ub, (ua, ub)
            slots.append({'kind': 'R', 'i': i, 'in': profs_in, 'cusp': (qc, pc)})
        else:
            G = strands[i - 1]['u'] - strands[i]['u']
            assert G > 0
            hold = G + 1
            width = 1 + hold
            for j in range(1, n + 1):
                if j == i: profs_in[j] = ([(q0, F(-i)), (q0 + 1, F(-(i + 1))), (q0 + width, F(-(i + 1)))], i + 1)
                elif j == i + 1: profs_in[j] = ([(q0, F(-(i + 1))), (q0 + 1, F(-i)), (q0 + width, F(-i))], i)
                else: profs_in[j] = ([(q0, F(-j)), (q0 + width, F(-j))], j)
            new = []
            for j in range(1, n + 1):
                prof, r = profs_in[j]
                new.append((r, {'u': strands[j - 1]['u'] + integ(prof, q0, q0 + width)}, ('in', j)))
            slots.append({'kind': 'X', 'i': i, 'in': profs_in})
        new.sort(key=lambda t: t[0])
        assert [t[0] for t in new] == list(range(1, len(new) + 1))
        # ordering check at the slot end
        for a, b in zip(new, new[1:]): assert a[1]['u'] > b[1]['u'], ('order', e)
        slots[-1]['out'] = {t[0]: t[2] for t in new}   # right position -> source
        slots[-1]['q0'] = q0; slots[-1]['q1'] = q0 + width
        strands = [t[1] for t in new]
        q = q0 + width
    assert not strands
    return slots

def right_profile(slot, j):
    """Profile (left->right) of the strand at right position j of the slot, and where it starts."""
    src = slot['out'][j]
    if src[0] == 'in': return slot['in'][src[1]][0], ('left', src[1])
    return (slot['up'] if src[1] == 'up' else slot['lo']), ('cusp', src[1])

def trace(ev, slots, orient):
    # start at orientation cusp
    e0, d = orient
    kind, i = ev[e0]
    pts = []
    def add(seq):
        for pt in seq:
            if not pts or pts[-1] != pt: pts.append(pt)
    if kind == 'L':
        k, j, direction = e0 + 1, (i if d == 'up' else i + 1), +1
        s = slots[e0]
        add([s['cusp']])
        add((s['up'] if d == 'up' else s['lo']))
    else:
        k, j, direction = e0, (i if d == 'up' else i + 1), -1
        s = slots[e0]
        add([s['cusp']])
        add(list(reversed(s['in'][j][0])))
    start = (k, j, direction)
    while True:
        if direction > 0:
            s = slots[k]
            prof, r = s['in'][j]
            if r is None:  # right cusp
                add(prof)
                other = s['i'] + 1 if j == s['i'] else s['i']
                add(list(reversed(s['in'][other][0])))
                j, direction = other, -1
            else:
                add(prof); k, j = k + 1, r
        else:
            s = slots[k - 1]
            prof, src = right_profile(s, j)
            add(list(reversed(prof)))
            if src[0] == 'cusp':
                other = s['i'] + 1 if src[1] == 'up' else s['i']
                add(s['up'] if src[1] == 'lo' else s['lo'])
                j, direction = other, +1
            else:
                k, j = k - 1, src[1]
        if (k, j, direction) == start: break
    cut = pts.index(pts[0], 1)
    return pts[:cut]

def simplify(pts):
    # drop vertices in the middle of straight runs
    out = []
    n = len(pts)
    for t in range(n):
        a, b, c = pts[t - 1], pts[t], pts[(t + 1) % n]
        cr = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])
        dot = (b[0] - a[0]) * (c[0] - b[0]) + (b[1] - a[1]) * (c[1] - b[1])
        if cr == 0 and dot > 0: continue
        out.append(b)
    return out

if __name__ == '__main__':
    ev, orient = parse(open(sys.argv[1]).read())
    slots = build(ev)
    pts = simplify(trace(ev, slots, orient))
    print('lagrangian')
    for q, p in pts: print(q, p)
