"""Operator expressions shared by the DSL and CLI tests."""

OPERATORS = [
    "id", "d", "e_0", "f_0", "h_0", "e_1", "f_2", "h_-1", "e_5", "f_-3",
    "e_0*f_0", "f_0*e_0", "e_0*f_0 - f_0*e_0", "e_1*f_1 - f_1*e_1",
    "e_0*f_1 - f_1*e_0", "f_0*f_1*f_0", "f_1*f_0*f_0 - 2*f_0*f_1*f_0 + f_0*f_0*f_1",
    "2*e_0", "1/2*f_1", "-f_0", "-3/4*e_1*f_1", "-(e_0 + f_0)", "(e_0 + f_0)*(e_1 - f_1)",
    "3*(d + id)", "-(2*d)", "1/3*(f_0*f_0)", "2*3*f_0", "h_0 + h_1 - id",
    "mul(s[1])", "adj(s[1])", "mul(e[2])", "adj(h[1])*mul(e[2])",
    "adj(p[2])*mul(p[2]) - mul(p[2])*adj(p[2])", "adj(h[2])*mul(e[1]) - mul(e[1])*adj(h[2])",
    "mul(s[2,1] - 1/2*p[2])", "adj(s[] + s[1])", "mul(3*h[1,1])", "adj(p[3,1])*mul(p[1])",
    "mul(e[1])*mul(h[1])", "mul(p[1]) + mul(e[1]) - 2*mul(h[1])",
    "tmul(e[1])", "tadj(h[1])", "tadj(h[1])*tmul(e[1])", "tmul(e[1])*tadj(h[1])",
    "tadj(h[1])*tmul(e[1]) - tmul(e[1])*tadj(h[1])", "tmul(p[2]) - tmul(p[1,1])",
    "f_0*tmul(e[1]) - tmul(e[1])*f_0", "e_1*tadj(h[2]) - tadj(h[2])*e_1",
    "(f_0 - f_1)*(f_0 + f_1)", "d*f_0 - f_0*d", "((f_0))", "id*id*f_0",
    "-1/2*(mul(p[2]) - adj(p[2]))", "mul(s[1])*(e_0 - 2*f_1)", "0*id",
]

# only those valid for every p in {2, 3}
STATES = ["s[]", "s[1]", "s[2,1]", "s[2] - s[1,1]", "1/2*s[3] + 2*s[2,1]", "p[2]", "h[2,1]"]
