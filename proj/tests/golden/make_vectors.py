#!/usr/bin/env python3
"""Regenerates codec_vectors.txt from a from-scratch model of the bit layout.

Test-only oracle: it shares no code with the C++ encoder. Each vector is a
name followed by the expected bit string.
"""
import math
import re
import sys

WORD = re.compile(r"[a-zA-Z0-9_.\-]+|[^a-zA-Z0-9_.\-]+")


def bits(value, width):
    return format(value, "0%db" % width) if width else ""


def exp(value):
    sign = "1" if value < 0 else "0"
    mag = bin(abs(value))[2:] if value else ""
    k = 1
    while 3 * k - 1 < len(mag):
        k += 1
    payload = sign + mag.rjust(3 * k - 1, "0")
    groups = [payload[3 * i:3 * i + 3] for i in range(k)]
    return "".join(("1" if i < k - 1 else "0") + g for i, g in enumerate(groups))


def unit(text):
    raw = text.encode("utf-8")
    return 7 if all(b < 0x80 for b in raw) else 8


def coding(text):
    return "00" if unit(text) == 7 else "01"


def plain(text):
    u = unit(text)
    return coding(text) + "".join(bits(b, u) for b in text.encode("utf-8")) + bits(3, u)


def key_width(n):
    return max(1, math.ceil(math.log2(n)))


def compressed(text, words):
    u = unit(text)
    segs = []
    for tok in WORD.findall(text):
        if tok in words:
            segs.append(("ref", words.index(tok)))
        elif segs and segs[-1][0] == "const":
            segs[-1] = ("const", segs[-1][1] + tok)
        else:
            segs.append(("const", tok))
    out = coding(text)
    parts = []
    for kind, val in segs:
        if kind == "ref":
            parts.append("1" + bits(val, key_width(len(words))))
        else:
            parts.append("0" + "".join(bits(b, u) for b in val.encode("utf-8")))
    out += bits(0, u).join(parts) if parts else ""
    return out + bits(3, u)


def dictionary(words):
    return "101" + "000" + exp(len(words)) + "".join(plain(w) for w in words)


EXAMPLE = ["Wi-Fi activity detected", "Wi-Fi activity not detected",
        "Wi-Fi 802.11ax activity at 9600 Mbps"]
EXAMPLE_WORDS = ["Wi-Fi", "activity", "detected"]


def program_header(words=None):
    return "0001" + (dictionary(words) if words else "") + "000"


def main():
    v = []
    for n in [0, 1, 3, -1, -3, 4, 20, -20, 1000, -1000, 9600]:
        v.append(("exp_%s" % str(n).replace("-", "neg"), exp(n)))
    v.append(("plain_empty", plain("")))
    v.append(("plain_hi", plain("hi")))
    v.append(("plain_utf8_e_acute", plain("é")))
    for i, s in enumerate(EXAMPLE):
        v.append(("plain_example_%d" % i, plain(s)))
    v.append(("dict_example", dictionary(EXAMPLE_WORDS)))
    v.append(("dict_abc", dictionary(["abc"])))
    for i, s in enumerate(EXAMPLE):
        v.append(("compressed_example_%d" % i, compressed(s, EXAMPLE_WORDS)))
    v.append(("compressed_empty_example", compressed("", EXAMPLE_WORDS)))
    v.append(("compressed_hi_example", compressed("hi", EXAMPLE_WORDS)))
    v.append(("compressed_utf8_example", compressed("Wi-Fi café", EXAMPLE_WORDS)))
    # exit
    v.append(("program_exit", program_header() + "00"))
    # print "No power" exit
    v.append(("program_print", program_header() + "01" + plain("No power") + "00"))
    # input "Q?" if "A": print "X" exit else if "B": exit
    v.append(("program_ask", program_header() + "10" + plain("Q?") + exp(2)
              + plain("A") + "01" + plain("X") + "00" + plain("B") + "00"))
    # inputs "N?" ifc > 10: exit else ifc > -5: exit else: print "low" exit
    v.append(("program_ask_numeric", program_header() + "11" + plain("N?") + exp(2)
              + exp(10) + "00" + exp(-5) + "00" + "1" + "01" + plain("low") + "00"))
    # input "What?" if "Wi-Fi activity": exit  (with the example dictionary)
    v.append(("program_ask_dict", program_header(EXAMPLE_WORDS) + "10"
              + compressed("What?", EXAMPLE_WORDS) + exp(1)
              + compressed("Wi-Fi activity", EXAMPLE_WORDS) + "00"))

    out = sys.stdout if len(sys.argv) < 2 else open(sys.argv[1], "w")
    out.write("# name bits (regenerate with make_vectors.py)\n")
    for name, b in v:
        out.write("%s %s\n" % (name, b))


if __name__ == "__main__":
    main()
