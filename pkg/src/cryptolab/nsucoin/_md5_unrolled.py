"""Straight-line MD5 steps over uint32 words (generated by tools/gen_md5_kernel.py; do not edit)."""

import numba as nb
import numpy as np

u32 = np.uint32


@nb.njit(inline='always', cache=True)
def md5_head12(w0, w1, w2, w3, w4, w5, w6, w7, w8, w9, w10, w11):
    a = u32(0x67452301)
    b = u32(0xefcdab89)
    c = u32(0x98badcfe)
    d = u32(0x10325476)
    t = u32(u32(a + (d ^ (b & (c ^ d)))) + u32(u32(0xd76aa478) + w0))
    a = u32(b + u32(u32(t << u32(7)) | u32(t >> u32(25))))
    t = u32(u32(d + (c ^ (a & (b ^ c)))) + u32(u32(0xe8c7b756) + w1))
    d = u32(a + u32(u32(t << u32(12)) | u32(t >> u32(20))))
    t = u32(u32(c + (b ^ (d & (a ^ b)))) + u32(u32(0x242070db) + w2))
    c = u32(d + u32(u32(t << u32(17)) | u32(t >> u32(15))))
    t = u32(u32(b + (a ^ (c & (d ^ a)))) + u32(u32(0xc1bdceee) + w3))
    b = u32(c + u32(u32(t << u32(22)) | u32(t >> u32(10))))
    t = u32(u32(a + (d ^ (b & (c ^ d)))) + u32(u32(0xf57c0faf) + w4))
    a = u32(b + u32(u32(t << u32(7)) | u32(t >> u32(25))))
    t = u32(u32(d + (c ^ (a & (b ^ c)))) + u32(u32(0x4787c62a) + w5))
    d = u32(a + u32(u32(t << u32(12)) | u32(t >> u32(20))))
    t = u32(u32(c + (b ^ (d & (a ^ b)))) + u32(u32(0xa8304613) + w6))
    c = u32(d + u32(u32(t << u32(17)) | u32(t >> u32(15))))
    t = u32(u32(b + (a ^ (c & (d ^ a)))) + u32(u32(0xfd469501) + w7))
    b = u32(c + u32(u32(t << u32(22)) | u32(t >> u32(10))))
    t = u32(u32(a + (d ^ (b & (c ^ d)))) + u32(u32(0x698098d8) + w8))
    a = u32(b + u32(u32(t << u32(7)) | u32(t >> u32(25))))
    t = u32(u32(d + (c ^ (a & (b ^ c)))) + u32(u32(0x8b44f7af) + w9))
    d = u32(a + u32(u32(t << u32(12)) | u32(t >> u32(20))))
    t = u32(u32(c + (b ^ (d & (a ^ b)))) + u32(u32(0xffff5bb1) + w10))
    c = u32(d + u32(u32(t << u32(17)) | u32(t >> u32(15))))
    t = u32(u32(b + (a ^ (c & (d ^ a)))) + u32(u32(0x895cd7be) + w11))
    b = u32(c + u32(u32(t << u32(22)) | u32(t >> u32(10))))
    return a, b, c, d


@nb.njit(inline='always', cache=True)
def md5_tail_word0(a, b, c, d, w0, w1, w2, w3, w4, w5, w6, w7, w8, w9, w10, w11, w12, w13, w14, w15):
    t = u32(u32(a + (d ^ (b & (c ^ d)))) + u32(u32(0x6b901122) + w12))
    a = u32(b + u32(u32(t << u32(7)) | u32(t >> u32(25))))
    t = u32(u32(d + (c ^ (a & (b ^ c)))) + u32(u32(0xfd987193) + w13))
    d = u32(a + u32(u32(t << u32(12)) | u32(t >> u32(20))))
    t = u32(u32(c + (b ^ (d & (a ^ b)))) + u32(u32(0xa679438e) + w14))
    c = u32(d + u32(u32(t << u32(17)) | u32(t >> u32(15))))
    t = u32(u32(b + (a ^ (c & (d ^ a)))) + u32(u32(0x49b40821) + w15))
    b = u32(c + u32(u32(t << u32(22)) | u32(t >> u32(10))))
    t = u32(u32(a + (c ^ (d & (b ^ c)))) + u32(u32(0xf61e2562) + w1))
    a = u32(b + u32(u32(t << u32(5)) | u32(t >> u32(27))))
    t = u32(u32(d + (b ^ (c & (a ^ b)))) + u32(u32(0xc040b340) + w6))
    d = u32(a + u32(u32(t << u32(9)) | u32(t >> u32(23))))
    t = u32(u32(c + (a ^ (b & (d ^ a)))) + u32(u32(0x265e5a51) + w11))
    c = u32(d + u32(u32(t << u32(14)) | u32(t >> u32(18))))
    t = u32(u32(b + (d ^ (a & (c ^ d)))) + u32(u32(0xe9b6c7aa) + w0))
    b = u32(c + u32(u32(t << u32(20)) | u32(t >> u32(12))))
    t = u32(u32(a + (c ^ (d & (b ^ c)))) + u32(u32(0xd62f105d) + w5))
    a = u32(b + u32(u32(t << u32(5)) | u32(t >> u32(27))))
    t = u32(u32(d + (b ^ (c & (a ^ b)))) + u32(u32(0x02441453) + w10))
    d = u32(a + u32(u32(t << u32(9)) | u32(t >> u32(23))))
    t = u32(u32(c + (a ^ (b & (d ^ a)))) + u32(u32(0xd8a1e681) + w15))
    c = u32(d + u32(u32(t << u32(14)) | u32(t >> u32(18))))
    t = u32(u32(b + (d ^ (a & (c ^ d)))) + u32(u32(0xe7d3fbc8) + w4))
    b = u32(c + u32(u32(t << u32(20)) | u32(t >> u32(12))))
    t = u32(u32(a + (c ^ (d & (b ^ c)))) + u32(u32(0x21e1cde6) + w9))
    a = u32(b + u32(u32(t << u32(5)) | u32(t >> u32(27))))
    t = u32(u32(d + (b ^ (c & (a ^ b)))) + u32(u32(0xc33707d6) + w14))
    d = u32(a + u32(u32(t << u32(9)) | u32(t >> u32(23))))
    t = u32(u32(c + (a ^ (b & (d ^ a)))) + u32(u32(0xf4d50d87) + w3))
    c = u32(d + u32(u32(t << u32(14)) | u32(t >> u32(18))))
    t = u32(u32(b + (d ^ (a & (c ^ d)))) + u32(u32(0x455a14ed) + w8))
    b = u32(c + u32(u32(t << u32(20)) | u32(t >> u32(12))))
    t = u32(u32(a + (c ^ (d & (b ^ c)))) + u32(u32(0xa9e3e905) + w13))
    a = u32(b + u32(u32(t << u32(5)) | u32(t >> u32(27))))
    t = u32(u32(d + (b ^ (c & (a ^ b)))) + u32(u32(0xfcefa3f8) + w2))
    d = u32(a + u32(u32(t << u32(9)) | u32(t >> u32(23))))
    t = u32(u32(c + (a ^ (b & (d ^ a)))) + u32(u32(0x676f02d9) + w7))
    c = u32(d + u32(u32(t << u32(14)) | u32(t >> u32(18))))
    t = u32(u32(b + (d ^ (a & (c ^ d)))) + u32(u32(0x8d2a4c8a) + w12))
    b = u32(c + u32(u32(t << u32(20)) | u32(t >> u32(12))))
    t = u32(u32(a + (b ^ c ^ d)) + u32(u32(0xfffa3942) + w5))
    a = u32(b + u32(u32(t << u32(4)) | u32(t >> u32(28))))
    t = u32(u32(d + (a ^ b ^ c)) + u32(u32(0x8771f681) + w8))
    d = u32(a + u32(u32(t << u32(11)) | u32(t >> u32(21))))
    t = u32(u32(c + (d ^ a ^ b)) + u32(u32(0x6d9d6122) + w11))
    c = u32(d + u32(u32(t << u32(16)) | u32(t >> u32(16))))
    t = u32(u32(b + (c ^ d ^ a)) + u32(u32(0xfde5380c) + w14))
    b = u32(c + u32(u32(t << u32(23)) | u32(t >> u32(9))))
    t = u32(u32(a + (b ^ c ^ d)) + u32(u32(0xa4beea44) + w1))
    a = u32(b + u32(u32(t << u32(4)) | u32(t >> u32(28))))
    t = u32(u32(d + (a ^ b ^ c)) + u32(u32(0x4bdecfa9) + w4))
    d = u32(a + u32(u32(t << u32(11)) | u32(t >> u32(21))))
    t = u32(u32(c + (d ^ a ^ b)) + u32(u32(0xf6bb4b60) + w7))
    c = u32(d + u32(u32(t << u32(16)) | u32(t >> u32(16))))
    t = u32(u32(b + (c ^ d ^ a)) + u32(u32(0xbebfbc70) + w10))
    b = u32(c + u32(u32(t << u32(23)) | u32(t >> u32(9))))
    t = u32(u32(a + (b ^ c ^ d)) + u32(u32(0x289b7ec6) + w13))
    a = u32(b + u32(u32(t << u32(4)) | u32(t >> u32(28))))
    t = u32(u32(d + (a ^ b ^ c)) + u32(u32(0xeaa127fa) + w0))
    d = u32(a + u32(u32(t << u32(11)) | u32(t >> u32(21))))
    t = u32(u32(c + (d ^ a ^ b)) + u32(u32(0xd4ef3085) + w3))
    c = u32(d + u32(u32(t << u32(16)) | u32(t >> u32(16))))
    t = u32(u32(b + (c ^ d ^ a)) + u32(u32(0x04881d05) + w6))
    b = u32(c + u32(u32(t << u32(23)) | u32(t >> u32(9))))
    t = u32(u32(a + (b ^ c ^ d)) + u32(u32(0xd9d4d039) + w9))
    a = u32(b + u32(u32(t << u32(4)) | u32(t >> u32(28))))
    t = u32(u32(d + (a ^ b ^ c)) + u32(u32(0xe6db99e5) + w12))
    d = u32(a + u32(u32(t << u32(11)) | u32(t >> u32(21))))
    t = u32(u32(c + (d ^ a ^ b)) + u32(u32(0x1fa27cf8) + w15))
    c = u32(d + u32(u32(t << u32(16)) | u32(t >> u32(16))))
    t = u32(u32(b + (c ^ d ^ a)) + u32(u32(0xc4ac5665) + w2))
    b = u32(c + u32(u32(t << u32(23)) | u32(t >> u32(9))))
    t = u32(u32(a + u32(c ^ u32(b | u32(~d)))) + u32(u32(0xf4292244) + w0))
    a = u32(b + u32(u32(t << u32(6)) | u32(t >> u32(26))))
    t = u32(u32(d + u32(b ^ u32(a | u32(~c)))) + u32(u32(0x432aff97) + w7))
    d = u32(a + u32(u32(t << u32(10)) | u32(t >> u32(22))))
    t = u32(u32(c + u32(a ^ u32(d | u32(~b)))) + u32(u32(0xab9423a7) + w14))
    c = u32(d + u32(u32(t << u32(15)) | u32(t >> u32(17))))
    t = u32(u32(b + u32(d ^ u32(c | u32(~a)))) + u32(u32(0xfc93a039) + w5))
    b = u32(c + u32(u32(t << u32(21)) | u32(t >> u32(11))))
    t = u32(u32(a + u32(c ^ u32(b | u32(~d)))) + u32(u32(0x655b59c3) + w12))
    a = u32(b + u32(u32(t << u32(6)) | u32(t >> u32(26))))
    t = u32(u32(d + u32(b ^ u32(a | u32(~c)))) + u32(u32(0x8f0ccc92) + w3))
    d = u32(a + u32(u32(t << u32(10)) | u32(t >> u32(22))))
    t = u32(u32(c + u32(a ^ u32(d | u32(~b)))) + u32(u32(0xffeff47d) + w10))
    c = u32(d + u32(u32(t << u32(15)) | u32(t >> u32(17))))
    t = u32(u32(b + u32(d ^ u32(c | u32(~a)))) + u32(u32(0x85845dd1) + w1))
    b = u32(c + u32(u32(t << u32(21)) | u32(t >> u32(11))))
    t = u32(u32(a + u32(c ^ u32(b | u32(~d)))) + u32(u32(0x6fa87e4f) + w8))
    a = u32(b + u32(u32(t << u32(6)) | u32(t >> u32(26))))
    t = u32(u32(d + u32(b ^ u32(a | u32(~c)))) + u32(u32(0xfe2ce6e0) + w15))
    d = u32(a + u32(u32(t << u32(10)) | u32(t >> u32(22))))
    t = u32(u32(c + u32(a ^ u32(d | u32(~b)))) + u32(u32(0xa3014314) + w6))
    c = u32(d + u32(u32(t << u32(15)) | u32(t >> u32(17))))
    t = u32(u32(b + u32(d ^ u32(c | u32(~a)))) + u32(u32(0x4e0811a1) + w13))
    b = u32(c + u32(u32(t << u32(21)) | u32(t >> u32(11))))
    t = u32(u32(a + u32(c ^ u32(b | u32(~d)))) + u32(u32(0xf7537e82) + w4))
    a = u32(b + u32(u32(t << u32(6)) | u32(t >> u32(26))))
    return u32(a + u32(0x67452301))


@nb.njit(inline='always', cache=True)
def md5_word0(w0, w1, w2, w3, w4, w5, w6, w7, w8, w9, w10, w11, w12, w13, w14, w15):
    a, b, c, d = md5_head12(w0, w1, w2, w3, w4, w5, w6, w7, w8, w9, w10, w11)
    return md5_tail_word0(a, b, c, d, w0, w1, w2, w3, w4, w5, w6, w7, w8, w9, w10, w11, w12, w13, w14, w15)
