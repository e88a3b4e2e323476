"""Generate the straight-line MD5 helpers used by the history-search kernel.

Usage: python tools/gen_md5_kernel.py > src/cryptolab/nsucoin/_md5_unrolled.py

Only the first digest word is produced, which is all the proof-of-work and
ctx-hash comparisons need (the register holding it is final after step 60).
"""

import math

S = [7, 12, 17, 22] * 4 + [5, 9, 14, 20] * 4 + [4, 11, 16, 23] * 4 + [6, 10, 15, 21] * 4
K = [int(abs(math.sin(i + 1)) * 2**32) & 0xFFFFFFFF for i in range(64)]
G = [i if i < 16 else (5 * i + 1) % 16 if i < 32 else (3 * i + 5) % 16 if i < 48 else (7 * i) % 16 for i in range(64)]
U = "u32"


def steps(start, stop):
    out = []
    regs = ["a", "b", "c", "d"]
    for i in range(start, stop):
        a, b, c, d = regs[(-i) % 4], regs[(1 - i) % 4], regs[(2 - i) % 4], regs[(3 - i) % 4]
        if i < 16:
            f = f"({d} ^ ({b} & ({c} ^ {d})))"
        elif i < 32:
            f = f"({c} ^ ({d} & ({b} ^ {c})))"
        elif i < 48:
            f = f"({b} ^ {c} ^ {d})"
        else:
            f = f"{U}({c} ^ {U}({b} | {U}(~{d})))"
        out.append(f"    t = {U}({U}({a} + {f}) + {U}({U}(0x{K[i]:08x}) + w{G[i]}))")
        out.append(f"    {a} = {U}({b} + {U}({U}(t << {U}({S[i]})) | {U}(t >> {U}({32 - S[i]}))))")
    return out


W12 = ", ".join(f"w{i}" for i in range(12))
W16 = ", ".join(f"w{i}" for i in range(16))
print('"""Straight-line MD5 steps over uint32 words (generated by tools/gen_md5_kernel.py; do not edit)."""')
print()
print("import numba as nb")
print("import numpy as np")
print()
print("u32 = np.uint32")
print()
print()
print("@nb.njit(inline='always', cache=True)")
print(f"def md5_head12({W12}):")
print("    a = u32(0x67452301)\n    b = u32(0xefcdab89)\n    c = u32(0x98badcfe)\n    d = u32(0x10325476)")
print("\n".join(steps(0, 12)))
print("    return a, b, c, d")
print()
print()
print("@nb.njit(inline='always', cache=True)")
print(f"def md5_tail_word0(a, b, c, d, {W16}):")
print("\n".join(steps(12, 61)))
print("    return u32(a + u32(0x67452301))")
print()
print()
print("@nb.njit(inline='always', cache=True)")
print(f"def md5_word0({W16}):")
print(f"    a, b, c, d = md5_head12({W12})")
print(f"    return md5_tail_word0(a, b, c, d, {W16})")
