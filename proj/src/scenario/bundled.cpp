#include "scenario/bundled.hpp"

#include "scenario/parse.hpp"

#include <map>

namespace cypair {

namespace {

// The Table-1 cast: rings, ambients, pairs and the Sarkisov links.
const char* kCast = R"SCN(
# Mf CY pairs of the quartic-with-A2-point family and the links between them.

[ring P3]
vars = x0 x1 x2 x3
weights = 1 1 1 1
atoms = B(x0,x1,x2):3 C(x0,x1,x2):4

[ring F1]
vars = x0 x1 x2 x3 x
weights = 1 1 1 0 -1 ; 0 0 0 1 1
atoms = B(x0,x1,x2):3,0 C(x0,x1,x2):4,0

[ring F2]
vars = x0 x1 x2 x3 x
weights = 1 1 1 0 -2 ; 0 0 0 1 1
atoms = B(x0,x1,x2):3,0 C(x0,x1,x2):4,0

[ring P1112]
vars = x0 x1 x2 y
weights = 1 1 1 2
atoms = B(x0,x1,x2):3 C(x0,x1,x2):4 L(x0,x1,x2):1 Q(x0,x1,x2):2

[ring P11122]
vars = x0 x1 x2 y0 y1
weights = 1 1 1 2 2
atoms = B(x0,x1,x2):3 C(x0,x1,x2):4 L(x0,x1,x2):1

[ring P11112]
vars = x0 x1 x2 x3 y
weights = 1 1 1 1 2
atoms = B(x0,x1,x2):3 C(x0,x1,x2):4 Q(x0,x1,x2):2

[ambient P3A]
ring = P3
chamber = 1

[ambient F1A]
ring = F1
chamber = 1 0 ; 0 1

[ambient F2A]
ring = F2
chamber = 1 0 ; 0 1

[ambient P1112A]
ring = P1112
chamber = 1

[ambient P11122A]
ring = P11122
chamber = 1

[ambient P11112A]
ring = P11112
chamber = 1

[pair obj1]
ambient = P3A
divisor = x0*x1*x3^2 + B*x3 + C

[pair obj2]
ambient = F1A
divisor = x0*x1*x3^2 + B*x3*x + C*x^2

[pair obj2a]
ambient = F2A
divisor = x0*x3^2 + B*x3*x + x1*C*x^2

[pair obj2b]
ambient = F2A
divisor = x1*x3^2 + B*x3*x + x0*C*x^2

[pair obj3a]
ambient = P1112A
divisor = x0*y^2 + B*y + x1*C

[pair obj3b]
ambient = P1112A
divisor = x1*y^2 + B*y + x0*C

[pair obj4]
ambient = P11122A
constraints = y0*y1 + C - L*(x0*y1 - x1*y0 - B)
divisor = x0*y1 - x1*y0 - B

[pair obj5a]
ambient = P11112A
constraints = y*(y+Q) - C + x3*((x0+x1)*y + x1*Q + B)
divisor = y + x1*x3

[pair obj5b]
ambient = P11112A
constraints = y*(y-Q) - C + x3*((x0+x1)*y - x0*Q + B)
divisor = y + x0*x3

[map sigma]
source = F1A
target = P3A
components = x0 ; x1 ; x2 ; x3/x

[map nu_a]
source = F2A
target = F1A
components = x0 ; x1 ; x2 ; x3 ; x*x1

[map nu_b]
source = F2A
target = F1A
components = x0 ; x1 ; x2 ; x3 ; x*x0

[map eps_a]
source = P3A
target = P1112A
components = x0 ; x1 ; x2 ; x3*x1

[map eps_b]
source = P3A
target = P1112A
components = x0 ; x1 ; x2 ; x3*x0

[map chi_a]
source = F2A
target = P1112A
components = x0 ; x1 ; x2 ; x3/x

[map chi_b]
source = F2A
target = P1112A
components = x0 ; x1 ; x2 ; x3/x

[map phi_b]
source = P1112A
target = P11122A
components = x0 ; x1 ; x2 ; y ; -x1*L - (x0*x1*L^2 + B*L + C)/(y - x0*L)
exceptional = y - x0*L
inverse = phi_b_inv

[map phi_b_inv]
source = P11122A
target = P1112A
components = x0 ; x1 ; x2 ; y0
exceptional = y0 - x0*L

[map phi_a]
source = P1112A
target = P11122A
components = x0 ; x1 ; x2 ; x0*L + (x0*x1*L^2 + B*L + C)/(y - x1*L) ; -y
exceptional = y - x1*L
inverse = phi_a_inv

[map phi_a_inv]
source = P11122A
target = P1112A
components = x0 ; x1 ; x2 ; -y1
exceptional = y1 + x1*L

[map psi_a]
source = P1112A
target = P11112A
components = x0 ; x1 ; x2 ; -(y*(y+Q) - C)/(x0*y + B + x1*(y+Q)) ; y
exceptional = x0*y + B + x1*(y+Q)
inverse = psi_a_inv

[map psi_a_inv]
source = P11112A
target = P1112A
components = x0 ; x1 ; x2 ; y
exceptional = x0*y + B + x1*(y+Q)

[map psi_b]
source = P1112A
target = P11112A
components = x0 ; x1 ; x2 ; -(y*(y-Q) - C)/(x1*y + B + x0*(y-Q)) ; y
exceptional = x1*y + B + x0*(y-Q)
inverse = psi_b_inv

[map psi_b_inv]
source = P11112A
target = P1112A
components = x0 ; x1 ; x2 ; y
exceptional = x1*y + B + x0*(y-Q)

[map iso5]
source = P11112A
target = P11112A
components = x0 ; x1 ; x2 ; x3 ; -y - x3*(x0+x1)

[map id_p3]
source = P3A
target = P3A
components = x0 ; x1 ; x2 ; x3
)SCN";

// Theorem B cast: the A1-quartic ring with its generic forms.
const char* kThmB = R"SCN(
[ring ThmB]
vars = x0 x1 x2 x3
weights = 1 1 1 1
atoms = A(x0,x1,x2):2 B(x0,x1,x2):3 C(x0,x1,x2):4 F(x0,x1,x2):1 G(x0,x1,x2):2

[ring PellP3]
vars = x0 x1 x2 x3
weights = 1 1 1 1

[ring PellUV]
vars = x0 x1 x2 u v
weights = 1 1 1 1 1
atoms = A(x0,x1,x2):2 B(x0,x1,x2):3 C(x0,x1,x2):4

[ring GQ]
vars = x y
weights = 1 1

[ambient ThmBA]
ring = ThmB
chamber = 1

[map tau]
source = ThmBA
target = ThmBA
components = A*x0 ; A*x1 ; A*x2 ; -A*x3 - B
)SCN";

// 2-ray game weight matrices from the toric constructions.
const char* kGames = R"SCN(
[ring F6z]
vars = z0 z1 z2 z3 u v
weights = 1 1 1 2 0 -2 ; 0 0 0 0 1 1

[ring F6psi]
vars = x0 x1 x2 y u v
weights = 1 1 1 2 0 -1 ; 0 0 0 0 1 1

[ring F7]
vars = x0 x1 x2 y u0 u1 u2
weights = 1 1 1 2 0 -1 -2 ; 0 0 0 0 1 1 1

[ring A2chain]
vars = x0 x1 x2 x3 x4
weights = -1 1 1 0 -2 ; -1 -2 0 1 1

[ring NB4]
vars = x0 x1 y0 y1
weights = 1 1 -2 -3

[ring NB4bad]
vars = x0 x1 y0 y1
weights = 1 2 -3 0

[ambient F6zNef]
ring = F6z
chamber = 1 0 ; 0 1

[ambient F6psiNef]
ring = F6psi
chamber = 1 0 ; 0 1

[ambient F7Nef]
ring = F7
chamber = 1 0 ; 0 1
)SCN";

const char* kLattices = R"SCN(
[lattice A1pic]
basis = h e
gram = 4 0 ; 0 -2

[lattice A2pic]
basis = h e0 e1
gram = 4 0 0 ; 0 -2 1 ; 0 1 -2

[lattice ClD5a]
basis = e1 e1bar
gram = -3/2 3 ; 3 -2
)SCN";

const char* kRegions = R"SCN(
[region diamond]
vars = b0 b1
ineq = -5*b0 + b1 + 6
ineq = 5*b0 - b1 + 6
ineq = b0 - 5*b1 + 6
ineq = -b0 + 5*b1 + 6

[region nefAB]
vars = a b
ineq = 5 + 2*a - 6*b
ineq = 15/2 + 3*b - 3*a
ineq = a
ineq = b

[region contradiction]
vars = b0 b1
eq = 5*b0 - b1 - 7
ineq = b0 - 5*b1 + 7
ineq = -b0 + 5*b1 + 7
)SCN";

std::string cat(std::initializer_list<const char*> parts) {
    std::string out;
    for (const char* p : parts) out += p;
    return out;
}

std::map<std::string, std::string> build_suites() {
    std::map<std::string, std::string> suites;

    suites["table1_wellformed"] = cat({kCast, R"SCN(
[check t01_obj1]
op = pair_wellformed
pair = obj1
provenance = derived

[check t02_obj2]
op = pair_wellformed
pair = obj2
provenance = derived

[check t03_obj2a]
op = pair_wellformed
pair = obj2a
provenance = derived

[check t04_obj2b]
op = pair_wellformed
pair = obj2b
provenance = derived

[check t05_obj3a]
op = pair_wellformed
pair = obj3a
provenance = derived

[check t06_obj3b]
op = pair_wellformed
pair = obj3b
provenance = derived

[check t07_obj4]
op = pair_wellformed
pair = obj4
provenance = derived

[check t08_obj5a]
op = pair_wellformed
pair = obj5a
provenance = derived

[check t09_obj5b]
op = pair_wellformed
pair = obj5b
provenance = derived

[check t10_obj2_degree]
op = multidegree
ring = F1
poly = x0*x1*x3^2 + B*x3*x + C*x^2
expect = (2,2)
provenance = paper

[check t11_obj1_degree]
op = multidegree
ring = P3
poly = x0*x1*x3^2 + B*x3 + C
expect = (4)
provenance = trivial

[check t12_mixed_degree]
op = multidegree
ring = F1
poly = x0 + x3
expect = none
provenance = trivial
)SCN"});

    suites["links_strict_transform"] = cat({kCast, R"SCN(
[check st01_sigma]
op = strict_transform
map = sigma
divisor_pair = obj1
expect_pair = obj2
expect_removed = x:2
provenance = paper

[check st02_eps_b]
op = strict_transform
map = eps_b
divisor_pair = obj3b
expect_pair = obj1
expect_removed = x0:1
provenance = derived

[check st03_eps_a]
op = strict_transform
map = eps_a
divisor_pair = obj3a
expect_pair = obj1
expect_removed = x1:1
provenance = derived

[check st04_nu_a]
op = strict_transform
map = nu_a
divisor_pair = obj2
expect_pair = obj2a
expect_removed = x1:1
provenance = paper

[check st05_nu_b]
op = strict_transform
map = nu_b
divisor_pair = obj2
expect_pair = obj2b
expect_removed = x0:1
provenance = paper

[check st06_chi_b]
op = strict_transform
map = chi_b
divisor_pair = obj3b
expect_pair = obj2b
provenance = paper

[check st07_chi_a]
op = strict_transform
map = chi_a
divisor_pair = obj3a
expect_pair = obj2a
provenance = paper

[check st08_phi_b]
op = strict_transform
map = phi_b
divisor_pair = obj4
expect_pair = obj3b
provenance = paper

[check st09_phi_a]
op = strict_transform
map = phi_a
divisor_pair = obj4
expect_pair = obj3a
provenance = derived

[check st10_psi_a]
op = strict_transform
map = psi_a
divisor_pair = obj5a
expect_pair = obj3a
provenance = paper

[check st11_psi_b]
op = strict_transform
map = psi_b
divisor_pair = obj5b
expect_pair = obj3b
provenance = derived

[check st12_identity]
op = strict_transform
map = id_p3
divisor_pair = obj1
expect_pair = obj1
expect_removed =
provenance = trivial

[check st13_iso5_divisor]
op = strict_transform
map = iso5
divisor_pair = obj5b
expect_pair = obj5a
provenance = paper
)SCN"});

    suites["links_composition"] = cat({kCast, kThmB, R"SCN(
[check c01_chi_b_factors]
op = map_equal
left = chi_b
right = eps_b.sigma.nu_b
chart = x0
expect = true
provenance = paper

[check c02_chi_a_factors]
op = map_equal
left = chi_a
right = eps_a.sigma.nu_a
chart = x1
expect = true
provenance = paper

[check c03_chi_b_second_chart]
op = map_equal
left = chi_b
right = eps_b.sigma.nu_b
chart = x2
expect = true
provenance = paper

[check c04_sigma_id]
op = map_equal
left = id_p3.sigma
right = sigma
chart = x0
expect = true
provenance = trivial

[check c05_mixed_factorization_differs]
op = map_equal
left = eps_b.sigma.nu_a
right = chi_b
chart = x0
expect = false
provenance = trivial

[check c06_involution]
op = map_identity
map = tau.tau
expect = true
provenance = derived

[check c07_iso5_involution]
op = map_identity
map = iso5.iso5
expect = true
provenance = derived

[check c08_obj5_substitution]
op = poly_identity
ring = P11112
lhs = y*(y+Q) - C + x3*((x0+x1)*y + x1*Q + B)
rhs = y*(y-Q) - C + x3*((x0+x1)*y - x0*Q + B)
rhs_bind = y -> -y - x3*(x0+x1)
mode = exact
expect = true
provenance = paper
)SCN"});

    suites["links_volume_preserving"] = cat({kCast, R"SCN(
[check vp01_sigma]
op = volume_preserving
map = sigma
src = obj2
tgt = obj1
src_chart = x0,x
tgt_chart = x0
src_chart2 = x1,x3
tgt_chart2 = x1
expect = preserved
provenance = derived

[check vp02_nu_a]
op = volume_preserving
map = nu_a
src = obj2a
tgt = obj2
src_chart = x0,x3
tgt_chart = x0,x3
src_chart2 = x2,x3
tgt_chart2 = x2,x3
expect = preserved
provenance = derived

[check vp03_nu_b]
op = volume_preserving
map = nu_b
src = obj2b
tgt = obj2
src_chart = x1,x3
tgt_chart = x1,x3
src_chart2 = x2,x3
tgt_chart2 = x2,x3
expect = preserved
provenance = derived

[check vp04_eps_a]
op = volume_preserving
map = eps_a
src = obj1
tgt = obj3a
src_chart = x0
tgt_chart = x0
src_chart2 = x2
tgt_chart2 = x2
expect = preserved
provenance = derived

[check vp05_eps_b]
op = volume_preserving
map = eps_b
src = obj1
tgt = obj3b
src_chart = x1
tgt_chart = x1
src_chart2 = x2
tgt_chart2 = x2
expect = preserved
provenance = derived

[check vp06_chi_a]
op = volume_preserving
map = chi_a
src = obj2a
tgt = obj3a
src_chart = x0,x3
tgt_chart = x0
src_chart2 = x1,x
tgt_chart2 = x1
expect = preserved
provenance = derived

[check vp07_chi_b]
op = volume_preserving
map = chi_b
src = obj2b
tgt = obj3b
src_chart = x0,x3
tgt_chart = x0
src_chart2 = x1,x
tgt_chart2 = x1
expect = preserved
provenance = derived

[check vp08_identity]
op = volume_preserving
map = id_p3
src = obj1
tgt = obj1
src_chart = x0
tgt_chart = x0
expect = preserved
provenance = trivial

[check vp09_rb_psi_a]
op = restricts_birationally
map = psi_a
src = obj3a
tgt = obj5a
elim = y
expect = true
provenance = derived

[check vp10_rb_psi_b]
op = restricts_birationally
map = psi_b
src = obj3b
tgt = obj5b
elim = y
expect = true
provenance = derived

[check vp11_rb_phi_b]
op = restricts_birationally
map = phi_b
src = obj3b
tgt = obj4
elim = y1
expect = true
provenance = derived

[check vp12_rb_phi_a]
op = restricts_birationally
map = phi_a
src = obj3a
tgt = obj4
elim = y1
expect = true
provenance = derived
)SCN"});

    suites["thmB_lattice"] = cat({kLattices, R"SCN(
[check bl01_pic_det]
op = gram_det
lattice = A1pic
classes = h ; e
expect = -8
provenance = paper

[check bl02_bundle_scan]
op = bundle_scan
target_det = -8
expect_only_case = 1
expect_rank_deficient = 8
provenance = paper

[check bl03_chern_case5]
op = chern_ideal
k = 0
expect = (0,1)
provenance = paper

[check bl04_chern_case9]
op = chern_ideal
k = -1
expect = (-1,1)
provenance = paper

[check bl05_chern_degenerate]
op = chern_ideal
k = 2
expect = (2,1)
provenance = trivial

[check bl06_antican_minus1]
op = pe_anticanonical
c1 = -1
expect = xi:2 L:4
provenance = derived

[check bl07_antican_zero]
op = pe_anticanonical
c1 = 0
expect = xi:2 L:3
provenance = paper

[check bl08_antican_point]
op = pe_anticanonical
rank = 4
c1 = 0
base_canonical = 0
expect = xi:4 L:0
provenance = trivial
)SCN"});

    suites["thmB_pell"] = cat({kThmB, R"SCN(
[check bp01_pell_identity]
op = poly_identity
ring = PellUV
lhs = 4*A*(A*u^2 + B*u*v + C*v^2)
rhs = (2*A*u + B*v)^2 - (B^2 - 4*A*C)*v^2
mode = exact
expect = true
provenance = paper

[check bp02_gq_identity_matrix]
op = gq_membership
ring = GQ
A = x^2 + 1
B = x*y
C = y^2 + x + 2
alpha = 1
beta = 0
gamma = 0
delta = 1
expect = component1
provenance = trivial

[check bp03_gq_component2]
op = gq_membership
ring = GQ
A = x^2 + 1
B = x*y
C = y^2 + x + 2
alpha = -5
beta = 3*(y^2 + x + 2)/(x^2 + 1) - 5*x*y/(x^2 + 1)
gamma = 3
delta = 5
expect = component2
provenance = paper

[check bp04_gq_nonmember]
op = gq_membership
ring = GQ
A = x^2 + 1
B = x*y
C = y^2 + x + 2
alpha = 1
beta = 2
gamma = 3
delta = 4
expect = not_member
provenance = derived

[check bp05_pell_norm_form]
op = pell_norm_form
ring = GQ
samples = 10
provenance = derived

[check bp06_variant1_members]
op = pell_selfmap
ring = PellP3
variant = 1
samples = 5
expect_fixes = true
provenance = derived

[check bp07_variant2_members]
op = pell_selfmap
ring = PellP3
variant = 2
samples = 5
expect_fixes = false
provenance = derived

[check bp08_involution]
op = map_identity
map = tau.tau
expect = true
provenance = derived

[check bp09_tau_not_pointwise]
op = fixes_pointwise
map = tau
divisor = x3^2*A + x3*B + C
expect = false
provenance = derived
)SCN"});

    suites["thmC_regions"] = cat({kRegions, R"SCN(
[check r01_diamond]
op = integer_points
region = diamond
expect = (-1,-1)(-1,0)(-1,1)(0,-1)(0,0)(0,1)(1,-1)(1,0)(1,1)
provenance = paper

[check r02_nef_ab]
op = integer_points
region = nefAB
expect = (0,0)(1,0)(1,1)(2,0)(2,1)(3,1)(4,2)
provenance = paper

[check r03_contradiction]
op = integer_points
region = contradiction
expect = empty
provenance = paper
)SCN"});

    suites["thmC_rr"] = cat({kLattices, R"SCN(
[check rr01_deg8]
op = rr_k3
lattice = ClD5a
curve = e1bar + 2*e1
polarization = e1 + e1bar
twist = 2
expect = 8 4 3 6 6
provenance = paper

[check rr02_deg18]
op = rr_k3
lattice = ClD5a
curve = 3*e1bar + 2*e1
polarization = e1 + e1bar
twist = 3
expect = 18 12 7 12 12
provenance = paper

[check rr03_deg10]
op = rr_k3
lattice = ClD5a
curve = 2*e1 + 2*e1bar
polarization = e1 + e1bar
twist = 2
expect = 10 10 6 5 6
provenance = paper

[check rr04_deg40]
op = rr_k3
lattice = ClD5a
curve = 4*e1 + 4*e1bar
polarization = e1 + e1bar
twist = 4
expect = 40 40 21 20 21
provenance = paper

[check rr05_deg36]
op = rr_k3
lattice = ClD5a
curve = 3*e1bar + 4*e1
polarization = e1 + e1bar
twist = 4
expect = 36 30 16 21 21
provenance = paper

[check rr06_ne_cone]
op = cone_decompose
lattice = A2pic
generators = h - 2*e0 - e1 ; h - 2*e1 - e0 ; e0 ; e1
target = 2*h - 2*e0 - 2*e1
expect = 1 1 1 1
provenance = derived

[check rr07_alpha_gram]
op = inner
lattice = A2pic
u = h - e0 - e1
v = h - e0 - e1
expect = 2
provenance = paper

[check rr08_e0_e0prime]
op = inner
lattice = A2pic
u = e0
v = h - 2*e0 - e1
expect = 3
provenance = paper

[check rr09_e0_e1prime]
op = inner
lattice = A2pic
u = e0
v = h - 2*e1 - e0
expect = 0
provenance = paper
)SCN"});

    suites["thmC_toric_games"] = cat({kGames, R"SCN(
[check g01_f6z_chambers]
op = chambers
ring = F6z
expect_count = 2
expect_chambers = 1 0 , 0 1 ; 0 1 , -2 1
provenance = paper

[check g02_f6z_irrelevant]
op = irrelevant
ambient = F6zNef
expect = (z0,z1,z2,z3)(u,v)
provenance = paper

[check g03_f6z_divisorial_wall]
op = wall
ring = F6z
from = 1 0 ; 0 1
to = 0 1 ; -2 1
expect = divisorial:v
provenance = paper

[check g04_f6z_fibration]
op = wall
ring = F6z
from = 1 0 ; 0 1
to = none
expect = fibration
provenance = paper

[check g05_f6psi_chambers]
op = chambers
ring = F6psi
expect_count = 2
expect_chambers = 1 0 , 0 1 ; 0 1 , -1 1
provenance = paper

[check g06_f6psi_irrelevant]
op = irrelevant
ambient = F6psiNef
expect = (x0,x1,x2,y)(u,v)
provenance = paper

[check g07_f6psi_divisorial_wall]
op = wall
ring = F6psi
from = 1 0 ; 0 1
to = 0 1 ; -1 1
expect = divisorial:v
provenance = paper

[check g08_f7_chambers]
op = chambers
ring = F7
expect_count = 3
expect_chambers = 1 0 , 0 1 ; 0 1 , -1 1 ; -1 1 , -2 1
provenance = paper

[check g09_f7_irrelevant]
op = irrelevant
ambient = F7Nef
expect = (x0,x1,x2,y)(u0,u1,u2)
provenance = paper

[check g10_f7_flip_wall]
op = wall
ring = F7
from = 1 0 ; 0 1
to = 0 1 ; -1 1
expect = small:u1,u2
provenance = paper

[check g11_f7_divisorial_wall]
op = wall
ring = F7
from = 0 1 ; -1 1
to = -1 1 ; -2 1
expect = divisorial:u2
provenance = paper

[check g12_a2chain_chambers]
op = chambers
ring = A2chain
expect_count = 5
provenance = derived

[check g13_a2chain_wall_ideal]
op = irrelevant
ring = A2chain
theta = -1 -1
expect = (x0, x1*x4)
provenance = paper

[check g14_a2chain_quotient]
op = quotient_chart
ring = A2chain
unit_set = x1 x4
expect_order = 3
expect_weights = 0 1 2
expect_rt = CanonicalNotTerminal
provenance = paper

[check g15_nb4_chambers]
op = chambers
ring = NB4
expect_count = 2
provenance = derived

[check g16_nb4_antiflip]
op = wall
ring = NB4
from = 1
to = -1
expect = small:y0,y1
provenance = paper

[check g17_nb4_quotient_y1]
op = quotient_chart
ring = NB4
unit_set = y1
expect_order = 3
expect_weights = 1 1 1
expect_rt = CanonicalNotTerminal
provenance = paper

[check g18_nb4_quotient_y0]
op = quotient_chart
ring = NB4
unit_set = y0
expect_order = 2
expect_weights = 1 1 1
expect_rt = Terminal
provenance = paper

[check g19_nb4bad_m2_wall]
op = wall
ring = NB4bad
from = 1
to = -1
expect = divisorial:y0
provenance = derived

[check g20_nb4bad_quotient]
op = quotient_chart
ring = NB4bad
unit_set = y0
expect_order = 3
expect_weights = 0 1 2
expect_rt = CanonicalNotTerminal
provenance = derived
)SCN"});

    suites["singularities"] = cat({kCast, kThmB, R"SCN(
[ring AFF]
vars = w x y z
weights = 1 1 1 1

[ambient AFFA]
ring = AFF
chamber = 1

[pair thmb_quartic]
ambient = ThmBA
divisor = x3^2*A + x3*B + C

[check s01_a2_cone]
op = tangent_cone
pair = obj1
chart = x3
point = 0 0 0
seeds = 3
expect_mult = 2
expect_rank = 2
provenance = paper

[check s02_a1_cone]
op = tangent_cone
pair = thmb_quartic
chart = x3
point = 0 0 0
seeds = 3
expect_mult = 2
expect_rank = 3
provenance = derived

[check s03_node_normal_form]
op = classify_ak
ambient = AFFA
poly = x^2 + y^2 + z^2 + y^4
chart = w
point = 0 0 0
max_k = 6
expect = A1
provenance = trivial

[check s04_cusp_normal_form]
op = classify_ak
ambient = AFFA
poly = x^2 + y^2 + z^3
chart = w
point = 0 0 0
max_k = 6
expect = A2
provenance = trivial

[check s05_sampled_quartic_a2]
op = classify_ak
pair = obj1
chart = x3
point = 0 0 0
seeds = 3
max_k = 6
expect = A2
provenance = derived

[check s06_d4_not_ak]
op = classify_ak
ambient = AFFA
poly = x^2 + y^2*z + z^3 + y^5
chart = w
point = 0 0 0
max_k = 6
expect = NotADuValAk
provenance = trivial

[check s07_ca2_point]
op = tangent_cone
pair = obj5a
poly_of = constraint
chart = x3
point = 0 0 0 0
seeds = 2
expect_mult = 2
expect_rank = 2
provenance = paper

[check s08_rt_half]
op = reid_tai
r = 2
weights = 1 1 1
expect = Terminal
provenance = paper

[check s09_rt_third_012]
op = reid_tai
r = 3
weights = 0 1 2
expect = CanonicalNotTerminal
provenance = paper

[check s10_rt_third_112]
op = reid_tai
r = 3
weights = 1 1 -2
expect = CanonicalNotTerminal
provenance = paper

[check s11_rt_fifth]
op = reid_tai
r = 5
weights = 1 1 -2
expect = CanonicalNotTerminal
provenance = paper

[check s12_rt_seventh]
op = reid_tai
r = 7
weights = 1 1 -2
expect = CanonicalNotTerminal
provenance = paper

[check s13_rt_trivial]
op = reid_tai
r = 1
weights = 5 7 11
expect = Terminal
provenance = trivial

[check s14_rt_oracle]
op = reid_tai_oracle
rmax = 30
provenance = derived
)SCN"});

    suites["identities"] = cat({kCast, kThmB, R"SCN(
[check i01_eq1]
op = poly_identity
ring = P1112
lhs = x1*y^2 + B*y + x0*C
rhs = (y - x0*L)*(x1*(y + x0*L) + B) + (x0*x1*L^2 + B*L + C)*x0
mode = exact
expect = true
provenance = paper

[check i02_eq1bis]
op = poly_identity
ring = P1112
lhs = x0*y^2 + B*y + x1*C
rhs = y*(x0*y + B + x1*(y+Q)) - x1*(y*(y+Q) - C)
mode = exact
expect = true
provenance = paper

[check i03_obj5_multline]
op = poly_identity
ring = P11112
lhs = y*(y+Q) - C + x3*((x0+x1)*y + x1*Q + B)
rhs = y*(y-Q) - C + x3*((x0+x1)*y - x0*Q + B)
rhs_bind = y -> -y - x3*(x0+x1)
mode = exact
expect = true
provenance = paper

[check i04_pell]
op = poly_identity
ring = PellUV
lhs = 4*A*(A*u^2 + B*u*v + C*v^2)
rhs = (2*A*u + B*v)^2 - (B^2 - 4*A*C)*v^2
mode = exact
expect = true
provenance = paper

[check i05_x4_y_substitution]
op = poly_identity
ring = P11112
lhs = y*(y+Q) - C + x3*((x0+x1)*y + x1*Q + B)
lhs_bind = y -> -x1*x3
rhs = -(x0*x1*x3^2 + B*x3 + C)
rhs_bind = x3 -> -x3
mode = exact
expect = true
provenance = derived
)SCN"});

    return suites;
}

const std::map<std::string, std::string>& suites() {
    static const std::map<std::string, std::string> s = build_suites();
    return s;
}

}  // namespace

std::vector<std::string> builtin_suites() {
    return {"table1_wellformed",  "links_strict_transform", "links_composition",
            "links_volume_preserving", "thmB_lattice",      "thmB_pell",
            "thmC_regions",       "thmC_rr",                "thmC_toric_games",
            "singularities",      "identities"};
}

const std::string& bundled_scenario_text(const std::string& name) {
    auto it = suites().find(name);
    if (it == suites().end()) throw math_error("unknown suite '" + name + "'");
    return it->second;
}

Scenario load_bundled(const std::string& name) {
    return scenario_parse(bundled_scenario_text(name), name);
}

SuiteReport run_suite(const std::string& name, uint64_t seed) {
    return run_scenario(load_bundled(name), seed);
}

}  // namespace cypair
