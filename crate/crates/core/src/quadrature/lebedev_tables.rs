// Lebedev-Laikov octahedral generators (orbit type, a, b, weight), weights
// normalized to 1. Transcribed from the Lebedev-Laikov C routines as
// distributed with scipy.integrate (getLebedevSphere port); rules with negative
// weights (74, 230, 266) are omitted.

use super::lebedev::{Generator, Orbit};

const LEBEDEV_6: &[Generator] = &[
    Generator { orbit: Orbit::A1, a: 0.0, b: 0.0, v: 0.1666666666666667 },
];

const LEBEDEV_14: &[Generator] = &[
    Generator { orbit: Orbit::A1, a: 0.0, b: 0.0, v: 0.06666666666666667 },
    Generator { orbit: Orbit::A3, a: 0.0, b: 0.0, v: 0.075 },
];

const LEBEDEV_26: &[Generator] = &[
    Generator { orbit: Orbit::A1, a: 0.0, b: 0.0, v: 0.04761904761904762 },
    Generator { orbit: Orbit::A2, a: 0.0, b: 0.0, v: 0.0380952380952381 },
    Generator { orbit: Orbit::A3, a: 0.0, b: 0.0, v: 0.03214285714285714 },
];

const LEBEDEV_38: &[Generator] = &[
    Generator { orbit: Orbit::A1, a: 0.0, b: 0.0, v: 0.009523809523809525 },
    Generator { orbit: Orbit::A3, a: 0.0, b: 0.0, v: 0.03214285714285714 },
    Generator { orbit: Orbit::Ck, a: 0.4597008433809831, b: 0.0, v: 0.02857142857142857 },
];

const LEBEDEV_50: &[Generator] = &[
    Generator { orbit: Orbit::A1, a: 0.0, b: 0.0, v: 0.0126984126984127 },
    Generator { orbit: Orbit::A2, a: 0.0, b: 0.0, v: 0.02257495590828924 },
    Generator { orbit: Orbit::A3, a: 0.0, b: 0.0, v: 0.02109375 },
    Generator { orbit: Orbit::Bk, a: 0.3015113445777636, b: 0.0, v: 0.02017333553791887 },
];

const LEBEDEV_86: &[Generator] = &[
    Generator { orbit: Orbit::A1, a: 0.0, b: 0.0, v: 0.01154401154401154 },
    Generator { orbit: Orbit::A3, a: 0.0, b: 0.0, v: 0.01194390908585628 },
    Generator { orbit: Orbit::Bk, a: 0.3696028464541502, b: 0.0, v: 0.0111105557106034 },
    Generator { orbit: Orbit::Bk, a: 0.6943540066026664, b: 0.0, v: 0.01187650129453714 },
    Generator { orbit: Orbit::Ck, a: 0.3742430390903412, b: 0.0, v: 0.01181230374690448 },
];

const LEBEDEV_110: &[Generator] = &[
    Generator { orbit: Orbit::A1, a: 0.0, b: 0.0, v: 0.003828270494937162 },
    Generator { orbit: Orbit::A3, a: 0.0, b: 0.0, v: 0.009793737512487513 },
    Generator { orbit: Orbit::Bk, a: 0.1851156353447362, b: 0.0, v: 0.008211737283191111 },
    Generator { orbit: Orbit::Bk, a: 0.6904210483822922, b: 0.0, v: 0.009942814891178103 },
    Generator { orbit: Orbit::Bk, a: 0.3956894730559419, b: 0.0, v: 0.009595471336070962 },
    Generator { orbit: Orbit::Ck, a: 0.4783690288121502, b: 0.0, v: 0.009694996361663029 },
];

const LEBEDEV_146: &[Generator] = &[
    Generator { orbit: Orbit::A1, a: 0.0, b: 0.0, v: 0.0005996313688621381 },
    Generator { orbit: Orbit::A2, a: 0.0, b: 0.0, v: 0.007372999718620756 },
    Generator { orbit: Orbit::A3, a: 0.0, b: 0.0, v: 0.007210515360144488 },
    Generator { orbit: Orbit::Bk, a: 0.6764410400114264, b: 0.0, v: 0.007116355493117555 },
    Generator { orbit: Orbit::Bk, a: 0.4174961227965453, b: 0.0, v: 0.006753829486314477 },
    Generator { orbit: Orbit::Bk, a: 0.1574676672039082, b: 0.0, v: 0.007574394159054034 },
    Generator { orbit: Orbit::Dk, a: 0.1403553811713183, b: 0.4493328323269557, v: 0.006991087353303262 },
];

const LEBEDEV_170: &[Generator] = &[
    Generator { orbit: Orbit::A1, a: 0.0, b: 0.0, v: 0.005544842902037365 },
    Generator { orbit: Orbit::A2, a: 0.0, b: 0.0, v: 0.006071332770670752 },
    Generator { orbit: Orbit::A3, a: 0.0, b: 0.0, v: 0.006383674773515093 },
    Generator { orbit: Orbit::Bk, a: 0.2551252621114134, b: 0.0, v: 0.00518338758774779 },
    Generator { orbit: Orbit::Bk, a: 0.6743601460362766, b: 0.0, v: 0.006317929009813725 },
    Generator { orbit: Orbit::Bk, a: 0.431891069671941, b: 0.0, v: 0.006201670006589077 },
    Generator { orbit: Orbit::Ck, a: 0.2613931360335988, b: 0.0, v: 0.005477143385137348 },
    Generator { orbit: Orbit::Dk, a: 0.4990453161796037, b: 0.1446630744325115, v: 0.005968383987681156 },
];

const LEBEDEV_194: &[Generator] = &[
    Generator { orbit: Orbit::A1, a: 0.0, b: 0.0, v: 0.001782340447244611 },
    Generator { orbit: Orbit::A2, a: 0.0, b: 0.0, v: 0.005716905949977102 },
    Generator { orbit: Orbit::A3, a: 0.0, b: 0.0, v: 0.005573383178848738 },
    Generator { orbit: Orbit::Bk, a: 0.6712973442695226, b: 0.0, v: 0.005608704082587997 },
    Generator { orbit: Orbit::Bk, a: 0.2892465627575439, b: 0.0, v: 0.005158237711805383 },
    Generator { orbit: Orbit::Bk, a: 0.4446933178717437, b: 0.0, v: 0.005518771467273614 },
    Generator { orbit: Orbit::Bk, a: 0.1299335447650067, b: 0.0, v: 0.004106777028169394 },
    Generator { orbit: Orbit::Ck, a: 0.3457702197611283, b: 0.0, v: 0.005051846064614808 },
    Generator { orbit: Orbit::Dk, a: 0.159041710538353, b: 0.8360360154824589, v: 0.005530248916233094 },
];

const LEBEDEV_302: &[Generator] = &[
    Generator { orbit: Orbit::A1, a: 0.0, b: 0.0, v: 0.0008545911725128148 },
    Generator { orbit: Orbit::A3, a: 0.0, b: 0.0, v: 0.003599119285025571 },
    Generator { orbit: Orbit::Bk, a: 0.3515640345570105, b: 0.0, v: 0.003449788424305883 },
    Generator { orbit: Orbit::Bk, a: 0.6566329410219612, b: 0.0, v: 0.003604822601419882 },
    Generator { orbit: Orbit::Bk, a: 0.4729054132581005, b: 0.0, v: 0.003576729661743367 },
    Generator { orbit: Orbit::Bk, a: 0.09618308522614784, b: 0.0, v: 0.002352101413689164 },
    Generator { orbit: Orbit::Bk, a: 0.2219645236294178, b: 0.0, v: 0.003108953122413675 },
    Generator { orbit: Orbit::Bk, a: 0.7011766416089545, b: 0.0, v: 0.003650045807677255 },
    Generator { orbit: Orbit::Ck, a: 0.2644152887060663, b: 0.0, v: 0.002982344963171804 },
    Generator { orbit: Orbit::Ck, a: 0.5718955891878961, b: 0.0, v: 0.00360082093221646 },
    Generator { orbit: Orbit::Dk, a: 0.2510034751770465, b: 0.8000727494073951, v: 0.003571540554273387 },
    Generator { orbit: Orbit::Dk, a: 0.1233548532583327, b: 0.4127724083168531, v: 0.00339231220500617 },
];

const LEBEDEV_350: &[Generator] = &[
    Generator { orbit: Orbit::A1, a: 0.0, b: 0.0, v: 0.003006796749453936 },
    Generator { orbit: Orbit::A3, a: 0.0, b: 0.0, v: 0.003050627745650771 },
    Generator { orbit: Orbit::Bk, a: 0.7068965463912316, b: 0.0, v: 0.001621104600288991 },
    Generator { orbit: Orbit::Bk, a: 0.4794682625712025, b: 0.0, v: 0.003005701484901752 },
    Generator { orbit: Orbit::Bk, a: 0.1927533154878019, b: 0.0, v: 0.002990992529653774 },
    Generator { orbit: Orbit::Bk, a: 0.6930357961327123, b: 0.0, v: 0.002982170644107595 },
    Generator { orbit: Orbit::Bk, a: 0.3608302115520091, b: 0.0, v: 0.002721564237310992 },
    Generator { orbit: Orbit::Bk, a: 0.6498486161496169, b: 0.0, v: 0.003033513795811141 },
    Generator { orbit: Orbit::Ck, a: 0.1932945013230339, b: 0.0, v: 0.003007949555218533 },
    Generator { orbit: Orbit::Ck, a: 0.3800494919899303, b: 0.0, v: 0.002881964603055307 },
    Generator { orbit: Orbit::Dk, a: 0.2899558825499574, b: 0.7934537856582315, v: 0.002958357626535696 },
    Generator { orbit: Orbit::Dk, a: 0.09684121455103957, b: 0.8280801506686862, v: 0.003036020026407088 },
    Generator { orbit: Orbit::Dk, a: 0.1833434647041659, b: 0.9074658265305127, v: 0.002832187403926303 },
];

const LEBEDEV_434: &[Generator] = &[
    Generator { orbit: Orbit::A1, a: 0.0, b: 0.0, v: 0.0005265897968224436 },
    Generator { orbit: Orbit::A2, a: 0.0, b: 0.0, v: 0.002548219972002607 },
    Generator { orbit: Orbit::A3, a: 0.0, b: 0.0, v: 0.002512317418927307 },
    Generator { orbit: Orbit::Bk, a: 0.6909346307509111, b: 0.0, v: 0.002530403801186355 },
    Generator { orbit: Orbit::Bk, a: 0.1774836054609158, b: 0.0, v: 0.002014279020918528 },
    Generator { orbit: Orbit::Bk, a: 0.4914342637784746, b: 0.0, v: 0.002501725168402936 },
    Generator { orbit: Orbit::Bk, a: 0.6456664707424256, b: 0.0, v: 0.002513267174597564 },
    Generator { orbit: Orbit::Bk, a: 0.2861289010307638, b: 0.0, v: 0.002302694782227416 },
    Generator { orbit: Orbit::Bk, a: 0.07568084367178018, b: 0.0, v: 0.001462495621594614 },
    Generator { orbit: Orbit::Bk, a: 0.3927259763368002, b: 0.0, v: 0.00244537343731298 },
    Generator { orbit: Orbit::Ck, a: 0.8818132877794288, b: 0.0, v: 0.002417442375638981 },
    Generator { orbit: Orbit::Ck, a: 0.9776428111182649, b: 0.0, v: 0.001910951282179532 },
    Generator { orbit: Orbit::Dk, a: 0.2054823696403044, b: 0.8689460322872412, v: 0.002416930044324775 },
    Generator { orbit: Orbit::Dk, a: 0.5905157048925271, b: 0.7999278543857286, v: 0.002512236854563495 },
    Generator { orbit: Orbit::Dk, a: 0.5550152361076807, b: 0.7717462626915901, v: 0.002496644054553086 },
    Generator { orbit: Orbit::Dk, a: 0.9371809858553722, b: 0.3344363145343455, v: 0.002236607760437849 },
];

const LEBEDEV_590: &[Generator] = &[
    Generator { orbit: Orbit::A1, a: 0.0, b: 0.0, v: 0.0003095121295306187 },
    Generator { orbit: Orbit::A3, a: 0.0, b: 0.0, v: 0.001852379698597489 },
    Generator { orbit: Orbit::Bk, a: 0.7040954938227469, b: 0.0, v: 0.001871790639277744 },
    Generator { orbit: Orbit::Bk, a: 0.6807744066455244, b: 0.0, v: 0.001858812585438317 },
    Generator { orbit: Orbit::Bk, a: 0.6372546939258752, b: 0.0, v: 0.001852028828296213 },
    Generator { orbit: Orbit::Bk, a: 0.5044419707800358, b: 0.0, v: 0.001846715956151242 },
    Generator { orbit: Orbit::Bk, a: 0.4215761784010967, b: 0.0, v: 0.001818471778162769 },
    Generator { orbit: Orbit::Bk, a: 0.3317920736472123, b: 0.0, v: 0.001749564657281154 },
    Generator { orbit: Orbit::Bk, a: 0.2384736701421887, b: 0.0, v: 0.001617210647254411 },
    Generator { orbit: Orbit::Bk, a: 0.1459036449157763, b: 0.0, v: 0.001384737234851692 },
    Generator { orbit: Orbit::Bk, a: 0.06095034115507196, b: 0.0, v: 0.000976433116505105 },
    Generator { orbit: Orbit::Ck, a: 0.6116843442009876, b: 0.0, v: 0.001857161196774078 },
    Generator { orbit: Orbit::Ck, a: 0.3964755348199858, b: 0.0, v: 0.001705153996395864 },
    Generator { orbit: Orbit::Ck, a: 0.1724782009907724, b: 0.0, v: 0.001300321685886048 },
    Generator { orbit: Orbit::Dk, a: 0.561026380862206, b: 0.3518280927733519, v: 0.001842866472905286 },
    Generator { orbit: Orbit::Dk, a: 0.474239284255198, b: 0.263471665593795, v: 0.001802658934377451 },
    Generator { orbit: Orbit::Dk, a: 0.598412649788538, b: 0.1816640840360209, v: 0.00184983056044366 },
    Generator { orbit: Orbit::Dk, a: 0.3791035407695563, b: 0.1720795225656878, v: 0.001713904507106709 },
    Generator { orbit: Orbit::Dk, a: 0.2778673190586244, b: 0.08213021581932511, v: 0.001555213603396808 },
    Generator { orbit: Orbit::Dk, a: 0.5033564271075117, b: 0.08999205842074876, v: 0.001802239128008525 },
];

pub(crate) const LEBEDEV_TABLES: &[(usize, u32, &[Generator])] = &[
    (6, 3, LEBEDEV_6),
    (14, 5, LEBEDEV_14),
    (26, 7, LEBEDEV_26),
    (38, 9, LEBEDEV_38),
    (50, 11, LEBEDEV_50),
    (86, 15, LEBEDEV_86),
    (110, 17, LEBEDEV_110),
    (146, 19, LEBEDEV_146),
    (170, 21, LEBEDEV_170),
    (194, 23, LEBEDEV_194),
    (302, 29, LEBEDEV_302),
    (350, 31, LEBEDEV_350),
    (434, 35, LEBEDEV_434),
    (590, 41, LEBEDEV_590),
];
