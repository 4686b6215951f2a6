"""Published coefficient tables, transcribed term for term.

Rows are written in the package's scalar syntax; ``w`` stands for the
primitive root of unity (``i`` in the p = 4 rows).  The transcription keeps
every printed term as is, including terms whose weighted degree does not fit
the row.
"""

QUADRATIC_INVERSE = {1: "1", 2: "-a", 3: "2*a^2", 4: "-5*a^3", 5: "14*a^4", 6: "-42*a^5"}

C_SEQUENCE = [-1, 2, -13, 145, -2328, 49784]

RELATIONS_P2 = {
    3: "-a2^2",
    5: "2*a2^4 - 3*a2*a4",
    7: "-13*a2^6 + 18*a2^3*a4 - 2*a4^2 - 4*a2*a6",
    9: "145*a2^8 - 221*a2^5*a4 + 50*a2^2*a4^2 + 35*a2^3*a6 - 5*a2*a8 - 5*a4*a6",
    11: ("-2328*a2^10 + 3879*a2^7*a4 - 561*a2^5*a6 - 1263*a2^4*a4^2 + 61*a2^3*a8"
         " + 171*a2^2*a4*a6 + 55*a2*a4^3 - 6*a2*a10 - 3*a6^2 - 6*a4*a8"),
}

RELATIONS_P3 = {
    4: "(1-4*w)/3*a2^3 - (7+8*w)/3*a2*a3",
    7: ("(3*w-1)*a3^3 + (4-8*w)*a2^2*a5 + (116-68*w)/9*a2^6 - (10+14*w)/3*a2*a6"
        " - (13+11*w)/3*a3*a5 - (154+332*w)/9*a2^4*a3 - (79+74*w)/9*a2^3*a3^2"),
    10: ("(22586+5656*w)/27*a2^9 + (1461-14576*w)/9*a2^7*a3 - (14446+14501*w)/27*a2^5*a3^2"
         " - (8891+12490*w)/27*a2^6*a3^2 + (8-1604*w)/27*a2^3*a3^3 - (8101+8*w)/27*a2^4*a3^3"
         " + (374+505*w)/3*a2*a3^4 + (1247-182*w)/3*a2^5*a5 - (2131+4319*w)/9*a2^3*a3*a5"
         " + (-338+80*w)/9*a2*a3^2*a5 + (7-15*w)*a2*a5^2 - (103+1154*w)/9*a2^4*a6"
         " - (545+361*w)/9*a2^2*a3*a6 - (7+22*w)*a3^2*a6 - (16+17*w)/3*a5*a6"
         " + (10-12*w)*a2^2*a8 - (19+14*w)/3*a3*a8 - (13+20*w)/3*a2*a9"),
}

RELATIONS_P4 = {
    5: "(-3+5*i)/2*a2^4 + (12+5*i)/2*a2^2*a3 - (3*i)/2*a3^2 + (1-3*i)*a2*a4",
    9: ("(743+118*i)/4*a2^8 - (35+578*i)*a2^6*a3 + (-3504+1307*i)/8*a2^4*a3^2"
        " + (172+215*i)/4*a2^2*a3^3 - (65*i)/8*a3^4 + (-345+23*i)/2*a2^5*a4"
        " + (119+332*i)/2*a2^3*a3*a4 + (2+99*i)/2*a2*a3^2*a4 + (33-25*i)/2*a2^2*a4^2"
        " + (32-7*i)/2*a3*a4^2 - (35-25*i)*a2^3*a6 + (32+11*i)*a2*a3*a6 - (1+5*i)*a4*a6"
        " + (24+27*i)/2*a2^2*a7 - 5*i*a3*a7 + (3-5*i)*a2*a8"),
}

RELATIONS = {2: RELATIONS_P2, 3: RELATIONS_P3, 4: RELATIONS_P4}
