#!/usr/bin/env python3
"""Regenerates core/data/catalog.json.

Right-hand sides are written below in Python infix syntax and converted to
expression trees. Names: sqrt, cbrt, log, atan, pi, alpha. Integer
quotients of literals fold to exact rationals.
"""

import argparse
import ast
import json
import sys
from fractions import Fraction
from pathlib import Path

FUNCS = {"sqrt": "Sqrt", "cbrt": "Cbrt", "log": "Log", "atan": "Arctan"}
BINOPS = {ast.Add: "Add", ast.Sub: "Sub", ast.Mult: "Mul", ast.Div: "Div"}


def literal(node):
    """Exact value of an integer/rational literal subtree, else None."""
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Fraction(node.value)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        v = literal(node.operand)
        return -v if v is not None else None
    if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Div):
        a, b = literal(node.left), literal(node.right)
        if a is not None and b is not None and b != 0:
            return a / b
    return None


def lit_node(v):
    if v.denominator == 1:
        return {"kind": "IntLit", "args": [str(v.numerator)]}
    return {"kind": "RatLit", "args": [f"{v.numerator}/{v.denominator}"]}


def convert(node):
    v = literal(node)
    if v is not None:
        return lit_node(v)
    if isinstance(node, ast.Name):
        if node.id == "pi":
            return {"kind": "Pi", "args": []}
        if node.id == "alpha":
            return {"kind": "GoldenRatio", "args": []}
        raise ValueError(f"unknown name {node.id}")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return {"kind": "Neg", "args": [convert(node.operand)]}
    if isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name) or node.func.id not in FUNCS or len(node.args) != 1:
            raise ValueError(f"unsupported call {ast.dump(node)}")
        return {"kind": FUNCS[node.func.id], "args": [convert(node.args[0])]}
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            e = literal(node.right)
            if e is None or e.denominator != 1:
                raise ValueError("exponent must be an integer literal")
            return {"kind": "Pow", "args": [convert(node.left), str(e.numerator)]}
        kind = BINOPS.get(type(node.op))
        if kind is None:
            raise ValueError(f"unsupported operator {ast.dump(node.op)}")
        return {"kind": kind, "args": [convert(node.left), convert(node.right)]}
    raise ValueError(f"unsupported syntax {ast.dump(node)}")


def expr(text):
    return convert(ast.parse(text, mode="eval").body)


def argument(z):
    """Rational "num/den" string when z is a literal, else an expression tree."""
    v = literal(ast.parse(z, mode="eval").body)
    if v is not None:
        return f"{v.numerator}/{v.denominator}"
    return expr(z)


RECORDS = []


def add(rid, ref, z, a, rhs, validity, tags, weight=None, convergence=None):
    rec = {
        "id": rid,
        "citation": ref,
        "lhs": {"z": argument(z), "a": a, "weight": weight or {"kind": "unit"}},
        "rhs": rhs if isinstance(rhs, dict) else expr(rhs),
        "validity": validity,
        "tags": tags,
    }
    if convergence:
        rec["convergence"] = convergence
    RECORDS.append(rec)


# ------------------------------------------------------------ perfect squares

BATIR = "z <= 27/4 with 81 - 12z a perfect square"
POSITIVE = [
    ("eq-27-4", "27/4", "2*pi**2/3 - 2*log(2)**2"),
    ("eq-20-3", "20/3", "6*atan(sqrt(3)/(cbrt(10)-1))**2 - 1/2*log(18/(cbrt(10)+2)**3)**2"),
    ("eq-77-12", "77/12", "6*atan(7*sqrt(3)/(2*cbrt(539)-7))**2 - 1/2*log(882/(cbrt(539)+7)**3)**2"),
    ("eq-6", "6", "6*atan(sqrt(3)/(2*cbrt(2)-1))**2 - 1/2*log(3/(cbrt(2)+1)**3)**2"),
    ("eq-65-12", "65/12", "6*atan(5*sqrt(3)/(2*cbrt(325)-5))**2 - 1/2*log(450/(cbrt(325)+5)**3)**2"),
    ("eq-14-3", "14/3", "6*atan(sqrt(3)/(cbrt(28)-1))**2 - 1/2*log(36/(cbrt(28)+2)**3)**2"),
    ("eq-15-4", "15/4", "6*atan(sqrt(3)/(2*cbrt(5)-1))**2 - 1/2*log(6/(cbrt(5)+1)**3)**2"),
    ("eq-italy", "8/3", "pi**2/6 - 1/2*log(3)**2"),
    ("eq-17-12", "17/12", "6*atan(sqrt(3)/(2*cbrt(17)-1))**2 - 1/2*log(18/(cbrt(17)+1)**3)**2"),
]
for rid, z, rhs in POSITIVE:
    add(rid, f"Batir's formula at the perfect-square argument z = {z}", z, 2, rhs, BATIR,
        ["batir-positive", "batir"])

ALTERNATING = [
    ("alt-27-4", "27/4",
     "6*atan(sqrt(3)/(2*cbrt(3+2*sqrt(2))+1))**2"
     " - 1/2*log((2+2*sqrt(2))/(cbrt(3+2*sqrt(2))-1)**3)**2"),
    ("alt-20-3", "20/3",
     "6*atan(sqrt(3)*cbrt(40)/(2*cbrt(121+9*sqrt(161))+cbrt(40)))**2"
     " - 1/2*log((81+9*sqrt(161))/(cbrt(121+9*sqrt(161))-cbrt(40))**3)**2"),
    ("alt-77-12", "77/12",
     "6*atan(sqrt(3)*cbrt(77)/(2*cbrt(239+18*sqrt(158))+cbrt(77)))**2"
     " - 1/2*log((162+18*sqrt(158))/(cbrt(239+18*sqrt(158))-cbrt(77))**3)**2"),
    ("alt-6", "6",
     "6*atan(sqrt(3)/(cbrt(26+6*sqrt(17))+1))**2"
     " - 1/2*log((9+3*sqrt(17))/(cbrt(13+3*sqrt(17))-cbrt(4))**3)**2"),
    ("alt-65-12", "65/12",
     "6*atan(sqrt(3)*cbrt(65)/(2*cbrt(227+18*sqrt(146))+cbrt(65)))**2"
     " - 1/2*log((162+18*sqrt(146))/(cbrt(227+18*sqrt(146))-cbrt(65))**3)**2"),
    ("alt-14-3", "14/3",
     "6*atan(sqrt(3)*cbrt(7)/(cbrt(218+18*sqrt(137))+cbrt(7)))**2"
     " - 1/2*log((81+9*sqrt(137))/(cbrt(109+9*sqrt(137))-cbrt(28))**3)**2"),
    ("alt-15-4", "15/4",
     "6*atan(sqrt(3)*cbrt(5)/(2*cbrt(23+6*sqrt(14))+cbrt(5)))**2"
     " - 1/2*log((18+6*sqrt(14))/(cbrt(23+6*sqrt(14))-cbrt(5))**3)**2"),
    ("alt-8-3", "8/3",
     "6*atan(sqrt(3)*cbrt(2)/(cbrt(97+9*sqrt(113))+cbrt(2)))**2"
     " - 1/2*log((81+9*sqrt(113))/(cbrt(97+9*sqrt(113))-cbrt(16))**3)**2"),
    ("alt-17-12", "17/12",
     "6*atan(sqrt(3)*cbrt(17)/(2*cbrt(179+126*sqrt(2))+cbrt(17)))**2"
     " - 1/2*log((162+126*sqrt(2))/(cbrt(179+126*sqrt(2))-cbrt(17))**3)**2"),
]
for rid, z, rhs in ALTERNATING:
    add(rid, f"Batir's formula at the negative argument z = -{z}", f"-{z}", 2, rhs,
        "81 + 12|z| is not a square; surd form of phi(-|z|)", ["batir-alternating", "batir"])

# ------------------------------------------------------------ (x, y) block

XY_VALID = "x/y >= 1 or x/y <= -(1+sqrt(2))^2; x != y for a < 2"
XY = [
    ("8-1", "8/3", [
        (1, "2*sqrt(3)*pi/7 - 2/7*log(3)"),
        (0, "32/49 + 74*sqrt(3)*pi/343 - 18/343*log(3)"),
    ]),
    ("8-neg1", "-(6*sqrt(6)/7)**2", [
        (2, "6*atan(sqrt(3)/5)**2 - 1/2*log(7)**2"),
        (1, "4*sqrt(3)/9*atan(sqrt(3)/5) - 2/3*log(7)"),
        (0, "-32/81 - 28*sqrt(3)/729*atan(sqrt(3)/5) - 14/81*log(7)"),
    ]),
    ("8-1_8", "(24*sqrt(3)/65)**2", [
        (2, "6*atan(sqrt(3)/7)**2 - 1/2*log(25/13)**2"),
        (1, "40*sqrt(3)/63*atan(sqrt(3)/7) - 4/21*log(25/13)"),
        (0, "256/3969 + 68120*sqrt(3)/250047*atan(sqrt(3)/7) - 1300/27783*log(25/13)"),
    ]),
    ("8-neg1_8", "-(8*sqrt(3)/21)**2", [
        (2, "6*atan(sqrt(3)/9)**2 - 1/2*log(7/3)**2"),
        (1, "24*sqrt(3)/65*atan(sqrt(3)/9) - 4/13*log(7/3)"),
        (0, "-256/4225 + 20328*sqrt(3)/274625*atan(sqrt(3)/9) - 252/2197*log(7/3)"),
    ]),
    ("1-1_27", "(27/28)**2", [
        (2, "6*atan(sqrt(3)/5)**2 - 1/2*log(16/7)**2"),
        (1, "12*sqrt(3)/13*atan(sqrt(3)/5) - 3/13*log(16/7)"),
        (0, "27/169 + 994*sqrt(3)/2197*atan(sqrt(3)/5) - 112/2197*log(16/7)"),
    ]),
    ("1-neg1_27", "-(27/26)**2", [
        (2, "6*atan(sqrt(3)/7)**2 - 1/2*log(13/4)**2"),
        (1, "3*sqrt(3)/7*atan(sqrt(3)/7) - 3/7*log(13/4)"),
        (0, "-27/196 + 143*sqrt(3)/2744*atan(sqrt(3)/7) - 52/343*log(13/4)"),
    ]),
    ("27-8", "(54*sqrt(2)/35)**2", [
        (2, "6*atan(sqrt(3)/2)**2 - 1/2*log(25/7)**2"),
        (1, "60*sqrt(3)/19*atan(sqrt(3)/2) - 6/19*log(25/7)"),
        (0, "864/361 + 35420*sqrt(3)/6859*atan(sqrt(3)/2) - 350/6859*log(25/7)"),
    ]),
    ("27-neg8", "-(54*sqrt(2)/19)**2", [
        (2, "6*atan(sqrt(3)/4)**2 - 1/2*log(19)**2"),
        (1, "12*sqrt(3)/35*atan(sqrt(3)/4) - 6/7*log(19)"),
        (0, "-864/1225 - 4484*sqrt(3)/42875*atan(sqrt(3)/4) - 38/343*log(19)"),
    ]),
]
LEVEL = {2: "A", 1: "B", 0: "C"}
PAIRS = {"8-1": "8, 1", "8-neg1": "8, -1", "8-1_8": "8, 1/8", "8-neg1_8": "8, -1/8",
         "1-1_27": "1, 1/27", "1-neg1_27": "1, -1/27", "27-8": "27, 8", "27-neg8": "27, -8"}
for key, z, rows in XY:
    divergent = key == "27-neg8"
    for a, rhs in rows:
        tags = ["xy-block", f"level-{LEVEL[a]}"]
        if divergent:
            tags.append("divergent-formal")
        add(f"xy-{key}-a{a}", f"identity ({LEVEL[a]}) instantiated at (x, y) = ({PAIRS[key]})",
            z, a, rhs, XY_VALID, tags, convergence="divergent-formal" if divergent else None)

# ------------------------------------------------------------ trigonometric

TRIG = [
    ("trig-D-pi12", "27/16", 2, "D", "pi/12",
     "6*atan(sqrt(3)/(2*cbrt(7+4*sqrt(3))-1))**2 - 1/2*log((8+4*sqrt(3))/(cbrt(7+4*sqrt(3))+1)**3)**2"),
    ("trig-D-pi8", "27/8", 2, "D", "pi/8",
     "6*atan(sqrt(3)/(2*cbrt(3+2*sqrt(2))-1))**2 - 1/2*log((4+2*sqrt(2))/(cbrt(3+2*sqrt(2))+1)**3)**2"),
    ("trig-D-pi6", "81/16", 2, "D", "pi/6",
     "6*atan(sqrt(3)/(2*cbrt(3)-1))**2 - 1/2*log(4/(cbrt(3)+1)**3)**2"),
    ("trig-E-pi12", "-9/4", 2, "E", "pi/12",
     "6*atan(sqrt(3)/(2*cbrt(7+4*sqrt(3))+1))**2 - 1/2*log((6+4*sqrt(3))/(cbrt(7+4*sqrt(3))-1)**3)**2"),
    ("trig-F-pi12", "27/16", 1, "F", "pi/12",
     "(cbrt(2+sqrt(3))+cbrt(2-sqrt(3)))*atan(sqrt(3)/(2*cbrt(7+4*sqrt(3))-1))"
     " + sqrt(3)/6*(cbrt(2+sqrt(3))-cbrt(2-sqrt(3)))*log((8+4*sqrt(3))/(cbrt(7+4*sqrt(3))+1)**3)"),
    ("trig-F-pi8", "27/8", 1, "F", "pi/8",
     "sqrt(3)*(cbrt(1+sqrt(2))-cbrt(1-sqrt(2)))*atan(sqrt(3)/(2*cbrt(3+2*sqrt(2))-1))"
     " + (cbrt(1+sqrt(2))+cbrt(1-sqrt(2)))/2*log((4+2*sqrt(2))/(cbrt(3+2*sqrt(2))+1)**3)"),
    ("trig-F-pi6", "81/16", 1, "F", "pi/6",
     "sqrt(cbrt(243))*(cbrt(3)+1)*atan(sqrt(3)/(2*cbrt(3)-1))"
     " + cbrt(3)*(cbrt(3)-1)/2*log(4/(cbrt(3)+1)**3)"),
]
TRIG_VALID = {"D": "x in (0, pi/4]", "E": "x in (0, pi/8]", "F": "x in (0, pi/4)"}
for rid, z, a, var, x, rhs in TRIG:
    add(rid, f"trigonometric identity ({var}) evaluated at x = {x}", z, a, rhs, TRIG_VALID[var],
        ["trigonometric", f"trig-{var}"])

# ------------------------------------------------------------ Fibonacci / Lucas families

FIB_VALID = "Fibonacci form: r >= 1"
LUC_VALID = "Lucas form: r = 0 or r >= 2"
THM1 = [
    ("thm1-fib-r1", "27/5", "FIB", 1,
     "6*atan(sqrt(3)/(2*cbrt(alpha**2)-1))**2 - 1/2*log(alpha*sqrt(5)/(cbrt(alpha**2)+1)**3)**2"),
    ("thm1-luc-r1", "-27", "LUC", 1,
     "6*atan(sqrt(3)/(2*cbrt(alpha**2)+1))**2 - 1/2*log(alpha/(cbrt(alpha**2)-1)**3)**2"),
    ("thm1-fib-r2", "-27/5", "FIB", 2,
     "6*atan(sqrt(3)/(2*cbrt(alpha**4)+1))**2 - 1/2*log(alpha**2*sqrt(5)/(cbrt(alpha**4)-1)**3)**2"),
    ("thm1-luc-r2", "3", "LUC", 2,
     "6*atan(sqrt(3)/(2*cbrt(alpha**4)-1))**2 - 1/2*log(3*alpha**2/(cbrt(alpha**4)+1)**3)**2"),
    ("thm1-fib-r3", "27/20", "FIB", 3,
     "6*atan(sqrt(15)-sqrt(12))**2 - 1/2*log(5/2)**2"),
    ("thm1-luc-r3", "-27/16", "LUC", 3,
     "6*atan((4*sqrt(3)-sqrt(15))/11)**2 - 2*log(2)**2"),
]
for rid, z, kind, r, rhs in THM1:
    divergent = rid == "thm1-luc-r1"
    tags = ["theorem-example", "thm1", "a2"]
    if divergent:
        tags.append("divergent-formal")
    name = "Fibonacci" if kind == "FIB" else "Lucas"
    add(rid, f"reciprocal {name} family with a = 2 (THM1_{kind}), worked example r = {r}", z, 2, rhs,
        FIB_VALID if kind == "FIB" else LUC_VALID, tags,
        convergence="divergent-formal" if divergent else None)

# V5 (family 1) and V6 (family 2) at m = n.
THM3 = [
    ("thm3-ex1-n2", 2, 1), ("thm3-ex1-n3", 3, 1), ("thm3-ex1-n4", 4, 1),
    ("thm3-ex2-n1", 1, 2), ("thm3-ex2-n3", 3, 2), ("thm3-ex2-n4", 4, 2),
]


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def luc(n):
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


for rid, n, fam in THM3:
    s = 1 if n % 2 == 0 else -1
    plus, minus = ("+", "-") if s > 0 else ("-", "+")
    l2n = luc(2 * n)
    if fam == 1:
        z = Fraction(54 * s * l2n, luc(n) ** 4)
        rhs = (f"6*atan(sqrt(3)/(cbrt({4 * l2n}) {minus} 1))**2"
               f" - 1/2*log({luc(n) ** 2}/(cbrt({l2n}) {plus} cbrt(2))**3)**2")
        variant = "THM3_V5"
    else:
        z = Fraction(-54 * s * l2n, 25 * fib(n) ** 4)
        rhs = (f"6*atan(sqrt(3)/(cbrt({4 * l2n}) {plus} 1))**2"
               f" - 1/2*log({5 * fib(n) ** 2}/(cbrt({l2n}) {minus} cbrt(2))**3)**2")
        variant = "THM3_V6"
    add(rid, f"Lucas-index identity {variant} at m = n, worked example n = {n}",
        f"{z.numerator}/{z.denominator}", 2, rhs, "m = n; argument inside the radius",
        ["theorem-example", "thm3", "a2"])

THM4 = [
    ("thm4-fib-r1", "27/5",
     "2*sqrt(3)*(cbrt(alpha**2)+1)/cbrt(alpha)*atan(sqrt(3)/(2*cbrt(alpha**2)-1))"
     " + (cbrt(alpha**2)-1)/cbrt(alpha)*log(alpha*sqrt(5)/(cbrt(alpha**2)+1)**3)"),
    ("thm4-fib-r2", "-27/5",
     "2*sqrt(3)/3*(cbrt(alpha**4)-1)/cbrt(alpha**2)*atan(sqrt(3)/(2*cbrt(alpha**4)+1))"
     " - (cbrt(alpha**4)+1)/(3*cbrt(alpha**2))*log(alpha**2*sqrt(5)/(cbrt(alpha**4)-1)**3)"),
    ("thm4-fib-r3", "27/20", "sqrt(15)/2*atan(sqrt(15)-sqrt(12)) - 1/4*log(5/2)"),
    ("thm4-luc-r2", "3",
     "2*sqrt(15)/5*(cbrt(alpha**4)+1)/cbrt(alpha**2)*atan(sqrt(3)/(2*cbrt(alpha**4)-1))"
     " + (cbrt(alpha**4)-1)/(sqrt(5)*cbrt(alpha**2))*log(3*alpha**2/(cbrt(alpha**4)+1)**3)"),
    ("thm4-luc-r3", "-27/16", "sqrt(15)/5*atan((4*sqrt(3)-sqrt(15))/11) - log(2)"),
]
for rid, z, rhs in THM4:
    kind = "FIB" if "fib" in rid else "LUC"
    add(rid, f"reciprocal family with a = 1 (THM4_{kind}), worked example r = {rid[-1]}", z, 1, rhs,
        FIB_VALID if kind == "FIB" else "Lucas form: r >= 2", ["theorem-example", "thm4", "a1"])

C = "cbrt(alpha**{0})"
B = "cbrt((1-alpha)**{0})"


def ab(e):
    return C.format(e), B.format(e)


a2, b2 = ab(2)
a4, b4 = ab(4)
a8, b8 = ab(8)
THM6 = [
    ("thm6-fib-r1", "27/5",
     f"4 + 2*sqrt(15)/3*(2*({a2}+{b2})+{a4}+{b4})*atan(sqrt(3)/(2*{a2}-1))"
     f" - sqrt(5)/3*(2*({a2}-{b2})-({a4}-{b4}))*log(sqrt(5)*alpha/({a2}+1)**3)"),
    ("thm6-fib-r2", "-27/5",
     f"-4/9 - 2*sqrt(15)/81*(2*({a4}+{b4})-({a8}+{b8}))*atan(sqrt(3)/(2*{a4}+1))"
     f" - sqrt(5)/81*(2*({a4}-{b4})+{a8}-{b8})*log(sqrt(5)*alpha**2/({a4}-1)**3)"),
    ("thm6-fib-r3", "27/20", "1/4 + 13*sqrt(15)/48*atan(sqrt(15)-sqrt(12)) - 5/96*log(5/2)"),
    ("thm6-luc-r2", "3",
     f"4/5 + 2*sqrt(15)/25*(2*({a4}+{b4})+{a8}+{b8})*atan(sqrt(3)/(2*{a4}-1))"
     f" + sqrt(5)/25*(2*({a4}-{b4})-({a8}-{b8}))*log(1+{a2}+{b2})"),
    ("thm6-luc-r3", "-27/16", "-1/5 + sqrt(15)/75*atan((4*sqrt(3)-sqrt(15))/11) - 1/6*log(4)"),
    ("thm6-luc-r6", "1/12", "1/80 + 183*sqrt(15)/3200*atan((sqrt(15)-sqrt(12))/3) - 9/256*log(3/2)"),
]
for rid, z, rhs in THM6:
    kind = "FIB" if "fib" in rid else "LUC"
    add(rid, f"reciprocal family with a = 0 (THM6_{kind}), worked example r = {rid[-1]}", z, 0, rhs,
        FIB_VALID if kind == "FIB" else "Lucas form: r >= 2", ["theorem-example", "thm6", "a0"])

A5 = "alpha**5"
PQ = [
    ("thm7-fib-pm2-q5", 2, "fib",
     "6*sqrt(5)/5*(atan(sqrt(3)*cbrt(2)/(2*cbrt(alpha**5)-cbrt(2)))**2 - atan(sqrt(3)/(2*cbrt(2*alpha**5)+1))**2)"
     " + sqrt(5)/10*(log(5*alpha**3/(cbrt(2*alpha**5)-1)**3)**2 - log(5*alpha**2/(cbrt(alpha**5)+cbrt(2))**3)**2)"),
    ("thm7-luc-pm2-q5", 2, "lucas",
     "6*(atan(sqrt(3)*cbrt(2)/(2*cbrt(alpha**5)-cbrt(2)))**2 + atan(sqrt(3)/(2*cbrt(2*alpha**5)+1))**2)"
     " - 1/2*(log(5*alpha**3/(cbrt(2*alpha**5)-1)**3)**2 + log(5*alpha**2/(cbrt(alpha**5)+cbrt(2))**3)**2)"),
    ("thm9-fib-pm2-q5", 1, "fib",
     "cbrt(2*alpha**5)*(2*sqrt(15)/5*((cbrt(2)+cbrt(alpha**5))/(2-alpha**5)*atan(sqrt(3)/(1-cbrt(4*alpha**5)))"
     " + (1-cbrt(2*alpha**5))/(1+2*alpha**5)*atan(sqrt(3)/(2*cbrt(2*alpha**5)+1)))"
     " + sqrt(5)/5*((cbrt(2)-cbrt(alpha**5))/(2-alpha**5)*log(5*alpha**2/(cbrt(2)+cbrt(alpha**5))**3)"
     " + (1+cbrt(2*alpha**5))/(1+2*alpha**5)*log(5*alpha**3/(cbrt(2*alpha**5)-1)**3)))"),
    ("thm9-luc-pm2-q5", 1, "lucas",
     "cbrt(2*alpha**5)*(2*sqrt(3)*((cbrt(2)+cbrt(alpha**5))/(2-alpha**5)*atan(sqrt(3)/(1-cbrt(4*alpha**5)))"
     " - (1-cbrt(2*alpha**5))/(1+2*alpha**5)*atan(sqrt(3)/(2*cbrt(2*alpha**5)+1)))"
     " + (cbrt(2)-cbrt(alpha**5))/(2-alpha**5)*log(5*alpha**2/(cbrt(2)+cbrt(alpha**5))**3)"
     " - (1+cbrt(2*alpha**5))/(1+2*alpha**5)*log(5*alpha**3/(cbrt(2*alpha**5)-1)**3))"),
    ("thm10-fib-pm2-q5", 0, "fib",
     "200/361 + 10*cbrt(2*alpha**11)/sqrt(15)*((cbrt(16)*(1+alpha**5)+cbrt(alpha**5)*(4+alpha**5))/(5*alpha+1)**3"
     "*atan(sqrt(3)/(2*cbrt(alpha**5/2)-1))"
     " + (cbrt(16*alpha**5)*(alpha**5-1)+1-4*alpha**5)/((alpha-5)**3*alpha**11)*atan(sqrt(3)/(2*cbrt(2*alpha**5)+1)))"
     " - sqrt(5)*cbrt(2*alpha**11)/3*((cbrt(2)+cbrt(alpha**5))*(cbrt(2)-cbrt(alpha**5))**3/(5*alpha+1)**3"
     "*log(5*alpha**2/(cbrt(alpha**5)+cbrt(2))**3)"
     " + (cbrt(2*alpha**5)-1)*(cbrt(2*alpha**5)+1)**3/((alpha-5)**3*alpha**11)*log(5*alpha**3/(cbrt(2*alpha**5)-1)**3))"),
    ("thm10-luc-pm2-q5", 0, "lucas",
     "328/361 + 10*sqrt(3)*cbrt(2*alpha**11)/3*((cbrt(alpha**5)*(alpha**5+4)+cbrt(16)*(alpha**5+1))/(alpha**5-2)**3"
     "*atan(sqrt(3)/(2*cbrt(alpha**5/2)-1))"
     " + alpha*(cbrt(16*alpha**20)+1-cbrt(16*alpha**5)*(cbrt(4*alpha**10)+1))/(2*alpha**5+1)**3"
     "*atan(sqrt(3)/(2*cbrt(2*alpha**5)+1)))"
     " - 5*cbrt(2*alpha**11)/3*((cbrt(2)+cbrt(alpha**5))*(cbrt(2)-cbrt(alpha**5))**3/(alpha**5-2)**3"
     "*log(5*alpha**2/(cbrt(alpha**5)+cbrt(2))**3)"
     " + alpha*(cbrt(2*alpha**5)-1)*(cbrt(2*alpha**5)+1)**3/(2*alpha**5+1)**3*log(5*alpha**3/(cbrt(2*alpha**5)-1)**3))"),
]
for rid, a, wkind, rhs in PQ:
    fam = rid.split("-")[0].upper() + ("_FIB" if wkind == "fib" else "_LUC")
    add(rid, f"weighted family {fam}, worked example (p, q) = (-2, 5)", "54/25", a, rhs,
        "p <= -2, q >= 4, q > |p| + 1", ["theorem-example", rid.split("-")[0], f"a{a}"],
        weight={"kind": wkind, "m": 1})

# ------------------------------------------------------------ Horadam (family references)

PELL = {"p": "2", "q": "1", "a": "0", "b": "1"}
for a, fam in ((2, "HORADAM_A2"), (1, "HORADAM_A1")):
    add(f"horadam-pell-a{a}-r1", f"Horadam generalization ({fam}) at the Pell numbers, r = 1", "27/8", a,
        {"family": fam, "params": {"r": 1, "horadam": PELL}},
        "p^2 + 4q > 0, W_r != 0", ["horadam", f"a{a}"])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-o", "--output", default=str(Path(__file__).resolve().parents[1] / "core/data/catalog.json"))
    ap.add_argument("--check", action="store_true", help="exit 1 if the output file is stale")
    args = ap.parse_args()
    text = json.dumps({"version": 1, "records": RECORDS}, indent=1, sort_keys=True) + "\n"
    out = Path(args.output)
    if args.check:
        current = out.read_text() if out.exists() else ""
        if current != text:
            print(f"{out} is stale; rerun {Path(__file__).name}", file=sys.stderr)
            return 1
        return 0
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)
    print(f"wrote {len(RECORDS)} records to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
