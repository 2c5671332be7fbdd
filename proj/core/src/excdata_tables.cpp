// Embedded exceptional-case data. One record per line, fields separated by tabs.
//
//   version     <format version>
//   case        <label> <real form> <dim p> <components min> <components max> <self-large rule>
//   orbit       <case> <orbit number> <(g^s, k^s)> <defect>
//   reduction   <case> <source> <dim O> <defect> <target> <dim O> <defect>
//   witness     <case> <source> <orbit of a commuting element in p^e>
//   unresolved  <case> <orbit> <K-Dynkin characteristic> <G-Dynkin characteristic>
//   selflarge   <case> <space-separated extra self-large orbits>
//   weighttest  <case> <space-separated orbits refuted by the f(-1) weight test>
//   note        <case> <orbit> <text>
//
// Orbit numbers follow the standard real-form classification tables.
// Pair names: Tr (Vr) is an r-dimensional torus in k (p); "+" is a direct sum.
// Self-large rule: distinguished | almost-distinguished | regular.
#include <string_view>

namespace nilcomm::detail {

extern const std::string_view kExceptionalTable;

const std::string_view kExceptionalTable = R"tbl(
version	1
case	GI	G2(2)	8	3	3	distinguished
case	FI	F4(4)	28	10	10	distinguished
case	FII	F4(-20)	16	2	2	distinguished
case	EI	E6(6)	42	4	6	distinguished
case	EII	E6(2)	40	17	17	almost-distinguished
case	EIII	E6(-14)	32	8	8	distinguished
case	EIV	E6(-26)	26	1	1	regular
case	EV	E7(7)	70	27	27	distinguished
case	EVI	E7(-5)	64	17	17	distinguished
case	EVII	E7(-25)	54	11	11	distinguished
case	EVIII	E8(8)	128	33	33	distinguished
case	EIX	E8(-24)	112	16	16	distinguished
orbit	GI	3	(0, 0)	0
orbit	GI	4	(0, 0)	0
orbit	GI	5	(0, 0)	0
orbit	FI	6	(sl3, sl3)	0
orbit	FI	16	(0, 0)	0
orbit	FI	17	(0, 0)	0
orbit	FI	18	(0, 0)	0
orbit	FI	19	(sl2, sl2)	0
orbit	FI	22	(0, 0)	0
orbit	FI	23	(0, 0)	0
orbit	FI	24	(0, 0)	0
orbit	FI	25	(0, 0)	0
orbit	FI	26	(0, 0)	0
orbit	FII	1	(sl4, sl4)	0
orbit	FII	2	(G2, G2)	0
orbit	EI	12	(T2, T1)	1
orbit	EI	16	(T1, 0)	1
orbit	EI	17	(T1, 0)	1
orbit	EI	18	(0, 0)	0
orbit	EI	19	(0, 0)	0
orbit	EI	20	(0, 0)	0
orbit	EI	21	(T1, 0)	1
orbit	EI	22	(0, 0)	0
orbit	EI	23	(T2, 0)	2
orbit	EII	6	(2sl2, 2sl2)	0
orbit	EII	12	(sl2+T1, sl2+T1)	0
orbit	EII	13	(sl2+T1, sl2+T1)	0
orbit	EII	20	(T2, T2)	0
orbit	EII	21	(T2, T2)	0
orbit	EII	22	(T2, T1)	1
orbit	EII	23	(sl3, sl3)	0
orbit	EII	25	(sl2+T1, sl2+T1)	0
orbit	EII	27	(T1, T1)	0
orbit	EII	28	(T1, T1)	0
orbit	EII	29	(T1, T1)	0
orbit	EII	30	(T1, T1)	0
orbit	EII	32	(0, 0)	0
orbit	EII	33	(0, 0)	0
orbit	EII	34	(T1, T1)	0
orbit	EII	35	(T1, T1)	0
orbit	EII	36	(0, 0)	0
orbit	EII	37	(0, 0)	0
orbit	EIII	3	(so7+T1, so7+T1)	0
orbit	EIII	4	(so7+T1, so7+T1)	0
orbit	EIII	7	(sl3+T1, sl3+T1)	0
orbit	EIII	8	(sl3+T1, sl3+T1)	0
orbit	EIII	9	(G2, G2)	0
orbit	EIII	10	(so5+T1, so5+T1)	0
orbit	EIII	11	(so5+T1, so5+T1)	0
orbit	EIII	12	(sl2+T1, sl5+T1)	0
orbit	EIV	1	(so7+T1, so7)	1
orbit	EIV	2	(G2, G2)	0
orbit	EV	16	(G2, G2)	0
orbit	EV	17	(G2, G2)	0
orbit	EV	39	(sl2, sl2)	0
orbit	EV	40	(sl2, sl2)	0
orbit	EV	48	(T2, T2)	0
orbit	EV	49	(T2, T2)	0
orbit	EV	50	(T2, 0)	2
orbit	EV	55	(sl2, sl2)	0
orbit	EV	56	(sl2, sl2)	0
orbit	EV	67	(0, 0)	0
orbit	EV	68	(0, 0)	0
orbit	EV	69	(0, 0)	0
orbit	EV	70	(0, 0)	0
orbit	EV	76	(0, 0)	0
orbit	EV	77	(0, 0)	0
orbit	EV	78	(0, 0)	0
orbit	EV	79	(0, 0)	0
orbit	EV	80	(T1, T1)	0
orbit	EV	81	(T1, 0)	1
orbit	EV	85	(0, 0)	0
orbit	EV	86	(0, 0)	0
orbit	EV	87	(0, 0)	0
orbit	EV	88	(0, 0)	0
orbit	EV	89	(0, 0)	0
orbit	EV	90	(0, 0)	0
orbit	EV	91	(0, 0)	0
orbit	EV	92	(0, 0)	0
orbit	EV	93	(0, 0)	0
orbit	EV	94	(0, 0)	0
orbit	EVI	6	(sl6, sl6)	0
orbit	EVI	14	(G2+sl2, G2+sl2)	0
orbit	EVI	19	(3sl2, 3sl2)	0
orbit	EVI	20	(3sl2, 3sl2)	0
orbit	EVI	22	(sp6, sp6)	0
orbit	EVI	24	(sl2+T1, sl2+T1)	0
orbit	EVI	25	(sl3+T1, sl3+T1)	0
orbit	EVI	27	(T2, T2)	0
orbit	EVI	28	(sl2+T1, sl2+T1)	0
orbit	EVI	29	(sl2, sl2)	0
orbit	EVI	31	(sl2, sl2)	0
orbit	EVI	32	(sl2, sl2)	0
orbit	EVI	33	(2sl2, 2sl2)	0
orbit	EVI	34	(2sl2, 2sl2)	0
orbit	EVI	35	(sl2, sl2)	0
orbit	EVI	36	(T1, T1)	0
orbit	EVI	37	(sl2, sl2)	0
orbit	EVII	6	(F4, F4)	0
orbit	EVII	7	(F4, F4)	0
orbit	EVII	11	(sl4+T1, sl4+T1)	0
orbit	EVII	12	(sl4+T1, sl4+T1)	0
orbit	EVII	16	(so7, so7)	0
orbit	EVII	17	(so7, so7)	0
orbit	EVII	18	(so7, so7)	0
orbit	EVII	19	(so7, so7)	0
orbit	EVII	20	(sl3+T1, sl3+T1)	0
orbit	EVII	21	(G2, G2)	0
orbit	EVII	22	(G2, G2)	0
orbit	EVIII	14	(G2, G2)	0
orbit	EVIII	15	(G2, G2)	0
orbit	EVIII	34	(sl3, sl3)	0
orbit	EVIII	42	(sl2+T1, sl2+T1)	0
orbit	EVIII	45	(2sl2, 2sl2)	0
orbit	EVIII	51	(sl3, sl3)	0
orbit	EVIII	67	(0, 0)	0
orbit	EVIII	68	(0, 0)	0
orbit	EVIII	69	(0, 0)	0
orbit	EVIII	70	(2sl2, 2sl2)	0
orbit	EVIII	79	(T1, T1)	0
orbit	EVIII	80	(T1, T1)	0
orbit	EVIII	81	(T1, 0)	1
orbit	EVIII	84	(T1, T1)	0
orbit	EVIII	85	(T1, 0)	1
orbit	EVIII	87	(T1, T1)	0
orbit	EVIII	88	(T1, 0)	1
orbit	EVIII	91	(0, 0)	0
orbit	EVIII	92	(0, 0)	0
orbit	EVIII	93	(T1, T1)	0
orbit	EVIII	94	(T1, T1)	0
orbit	EVIII	95	(T1, 0)	1
orbit	EVIII	98	(0, 0)	0
orbit	EVIII	99	(0, 0)	0
orbit	EVIII	101	(0, 0)	0
orbit	EVIII	102	(0, 0)	0
orbit	EVIII	104	(0, 0)	0
orbit	EVIII	105	(0, 0)	0
orbit	EVIII	106	(0, 0)	0
orbit	EVIII	107	(0, 0)	0
orbit	EVIII	109	(0, 0)	0
orbit	EVIII	110	(0, 0)	0
orbit	EVIII	111	(0, 0)	0
orbit	EVIII	112	(0, 0)	0
orbit	EVIII	113	(0, 0)	0
orbit	EVIII	114	(0, 0)	0
orbit	EVIII	115	(0, 0)	0
orbit	EIX	6	(E6, E6)	0
orbit	EIX	18	(so8, so8)	0
orbit	EIX	19	(so8, so8)	0
orbit	EIX	21	(F4, F4)	0
orbit	EIX	23	(so5+T1, so5+T1)	0
orbit	EIX	24	(sl5, sl5)	0
orbit	EIX	26	(sl3+T1, sl3+T1)	0
orbit	EIX	27	(sl4, sl4)	0
orbit	EIX	28	(2sl2, 2sl2)	0
orbit	EIX	30	(G2, G2)	0
orbit	EIX	31	(G2, G2)	0
orbit	EIX	32	(so7, so7)	0
orbit	EIX	33	(so7, so7)	0
orbit	EIX	34	(2sl2, 2sl2)	0
orbit	EIX	35	(sl3, sl3)	0
orbit	EIX	36	(G2, G2)	0
reduction	EII	22	29	1	24	30	0
reduction	EV	50	52	2	54	53	1
reduction	EV	81	59	1	85	60	0
reduction	EVIII	81	107	1	84	108	0
reduction	EVIII	88	109	1	91	110	0
reduction	EVIII	95	111	1	98	112	0
reduction	EI	21	34	1	18	35	0
reduction	EI	17	32	1	22	33	0
witness	EIV	1	2
witness	EI	16	18
witness	EVIII	85	109
unresolved	EIV	1	0001	100001
unresolved	EI	16	1111	111011
unresolved	EVIII	85	11111111	10010101
unresolved	EI	12	2002	000200
unresolved	EI	23	0020	000200
selflarge	EI	12 21 23
selflarge	EV	81
selflarge	EVIII	81 95
weighttest	EV	50
weighttest	EVIII	85 88
weighttest	EI	16 17
note	EIV	1	listed as distinguished in the source classification table; corrected to defect 1
note	EVIII	15	absent from an earlier list of distinguished orbits; distinguished
)tbl";

}  // namespace nilcomm::detail
