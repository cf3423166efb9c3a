//! Transcribed coefficient data for the closed-form area generating
//! functions of level 1, 2 and 3 polyominoes with cheesy blocks.
//!
//! Keeping the raw coefficient lists in one place makes a transcription
//! slip localizable: the transfer counts are compared against these series
//! coefficient by coefficient through order 30, so any wrong entry below
//! that order trips the cross-check immediately, and the level-1 list is
//! additionally reproduced by solving the functional-equation system.

// q - 6q^2 + 11q^3 - 6q^4 + 2q^5
pub(super) const LEVEL1_NUM: &[i64] = &[0, 1, -6, 11, -6, 2];

// 1 - 9q + 27q^2 - 32q^3 + 13q^4 - 3q^5 - q^6
pub(super) const LEVEL1_DEN: &[i64] = &[1, -9, 27, -32, 13, -3, -1];

// q - 13q^2 + 70q^3 - 202q^4 + 336q^5 - 317q^6 + 143q^7 + 18q^8 - 84q^9
// + 11q^10 + 227q^11 - 375q^12 + 267q^13 - 165q^14 + 134q^15 - 21q^16
// + 4q^17 - 124q^18 + 98q^19 - 12q^20 + 28q^21 - 16q^22
pub(super) const LEVEL2_NUM: &[i64] = &[
    0, 1, -13, 70, -202, 336, -317, 143, 18, -84, 11, 227, -375, 267, -165,
    134, -21, 4, -124, 98, -12, 28, -16,
];

// 1 - 16q + 107q^2 - 391q^3 + 850q^4 - 1108q^5 + 797q^6 - 169q^7 - 266q^8
// + 317q^9 + 159q^10 - 913q^11 + 1081q^12 - 672q^13 + 446q^14 - 268q^15
// + 7q^16 - 158q^17 + 404q^18 - 222q^19 + 42q^20 - 70q^21 + 34q^22
pub(super) const LEVEL2_DEN: &[i64] = &[
    1, -16, 107, -391, 850, -1108, 797, -169, -266, 317, 159, -913, 1081,
    -672, 446, -268, 7, -158, 404, -222, 42, -70, 34,
];

// q - 24q^2 + 264q^3 - 1766q^4 + 8033q^5 - 26297q^6 + 63860q^7
// - 116445q^8 + 157849q^9 - 148533q^10 + 61825q^11 + 99443q^12
// - 308464q^13 + 519182q^14 - 655900q^15 + 618461q^16 - 344081q^17
// - 101610q^18 + 519331q^19 - 707969q^20 + 601249q^21 - 284943q^22
// - 68043q^23 + 297023q^24 - 346370q^25 + 265550q^26 - 140577q^27
// + 31503q^28 + 64681q^29 - 166424q^30 + 234520q^31 - 218182q^32
// + 130432q^33 - 29144q^34 - 33391q^35 + 38482q^36 - 12237q^37
// - 2050q^38 - 6144q^39 + 18593q^40 - 21514q^41 + 11634q^42 + 3351q^43
// - 13907q^44 + 12096q^45 + 2302q^46 - 8825q^47 + 570q^48 + 4681q^49
// - 1695q^50 - 1519q^51 + 1290q^52 + 64q^53 - 224q^54 + 44q^55 - 12q^56
pub(super) const LEVEL3_NUM: &[i64] = &[
    0, 1, -24, 264, -1766, 8033, -26297, 63860, -116445, 157849, -148533,
    61825, 99443, -308464, 519182, -655900, 618461, -344081, -101610,
    519331, -707969, 601249, -284943, -68043, 297023, -346370, 265550,
    -140577, 31503, 64681, -166424, 234520, -218182, 130432, -29144,
    -33391, 38482, -12237, -2050, -6144, 18593, -21514, 11634, 3351,
    -13907, 12096, 2302, -8825, 570, 4681, -1695, -1519, 1290, 64, -224,
    44, -12,
];

// 1 - 27q + 334q^2 - 2515q^3 + 12906q^4 - 47836q^5 + 132248q^6
// - 276956q^7 + 438796q^8 - 508406q^9 + 365771q^10 + 36865q^11
// - 648120q^12 + 1344653q^13 - 1932847q^14 + 2126787q^15 - 1632701q^16
// + 408884q^17 + 1117382q^18 - 2223607q^19 + 2392085q^20 - 1636807q^21
// + 418146q^22 + 665251q^23 - 1211688q^24 + 1191386q^25 - 838060q^26
// + 416174q^27 - 41907q^28 - 323733q^29 + 664097q^30 - 810808q^31
// + 657803q^32 - 319442q^33 + 14159q^34 + 120746q^35 - 95202q^36
// + 22341q^37 - 7930q^38 + 47294q^39 - 74720q^40 + 62640q^41 - 19120q^42
// - 28394q^43 + 46822q^44 - 21864q^45 - 18416q^46 + 20930q^47 + 6617q^48
// - 14093q^49 + 982q^50 + 5867q^51 - 2682q^52 - 642q^53 + 608q^54
// - 88q^55 + 12q^56
pub(super) const LEVEL3_DEN: &[i64] = &[
    1, -27, 334, -2515, 12906, -47836, 132248, -276956, 438796, -508406,
    365771, 36865, -648120, 1344653, -1932847, 2126787, -1632701, 408884,
    1117382, -2223607, 2392085, -1636807, 418146, 665251, -1211688,
    1191386, -838060, 416174, -41907, -323733, 664097, -810808, 657803,
    -319442, 14159, 120746, -95202, 22341, -7930, 47294, -74720, 62640,
    -19120, -28394, 46822, -21864, -18416, 20930, 6617, -14093, 982, 5867,
    -2682, -642, 608, -88, 12,
];
