//! Values published for k = 2, 3, 4, copied verbatim.

#![allow(dead_code)]

/// `(k, rows)`; each row is `n, C_{n,1}, ..., C_{n,k}`.
pub const MULTIPLICITY: &[(usize, &[&[u64]])] = &[
    (
        2,
        &[
            &[0, 0, 0],
            &[1, 1, 0],
            &[2, 2, 1],
            &[3, 5, 2],
            &[4, 10, 5],
            &[5, 20, 10],
            &[6, 38, 20],
            &[7, 71, 38],
            &[8, 130, 71],
            &[9, 235, 130],
            &[10, 420, 235],
            &[11, 744, 420],
            &[12, 1308, 744],
            &[13, 2285, 1308],
            &[14, 3970, 2285],
            &[15, 6865, 3970],
            &[16, 11822, 6865],
            &[17, 20284, 11822],
            &[18, 34690, 20284],
            &[19, 59155, 34690],
            &[20, 100610, 59155],
        ],
    ),
    (
        3,
        &[
            &[0, 0, 0, 0],
            &[1, 1, 0, 0],
            &[2, 2, 1, 0],
            &[3, 5, 2, 1],
            &[4, 12, 5, 2],
            &[5, 26, 12, 5],
            &[6, 56, 26, 12],
            &[7, 118, 56, 26],
            &[8, 244, 118, 56],
            &[9, 499, 244, 118],
            &[10, 1010, 499, 244],
            &[11, 2027, 1010, 499],
            &[12, 4040, 2027, 1010],
            &[13, 8004, 4040, 2027],
            &[14, 15776, 8004, 4040],
            &[15, 30956, 15776, 8004],
            &[16, 60504, 30956, 15776],
            &[17, 117845, 60504, 30956],
            &[18, 228818, 117845, 60504],
            &[19, 443057, 228818, 117845],
            &[20, 855732, 443057, 228818],
        ],
    ),
    (
        4,
        &[
            &[0, 0, 0, 0, 0],
            &[1, 1, 0, 0, 0],
            &[2, 2, 1, 0, 0],
            &[3, 5, 2, 1, 0],
            &[4, 12, 5, 2, 1],
            &[5, 28, 12, 5, 2],
            &[6, 62, 28, 12, 5],
            &[7, 136, 62, 28, 12],
            &[8, 294, 136, 62, 28],
            &[9, 628, 294, 136, 62],
            &[10, 1328, 628, 294, 136],
            &[11, 2787, 1328, 628, 294],
            &[12, 5810, 2787, 1328, 628],
            &[13, 12043, 5810, 2787, 1328],
            &[14, 24840, 12043, 5810, 2787],
            &[15, 51016, 24840, 12043, 5810],
            &[16, 104380, 51016, 24840, 12043],
            &[17, 212848, 104380, 51016, 24840],
            &[18, 432732, 212848, 104380, 51016],
            &[19, 877400, 432732, 212848, 104380],
            &[20, 1774672, 877400, 432732, 212848],
        ],
    ),
];

/// `(k, rows)`; each row is `n, F, appr, T, appr, A, appr, C_1, appr, A_1, appr`.
pub const COMPARISON: &[(usize, &[[&str; 11]])] = &[
    (
        2,
        &[
            [
                "0", "1", "0.724", "0", "0.089", "0.0", "0.124", "0", "0.179", "0.0", "0.247",
            ],
            [
                "1", "1", "1.171", "1", "0.992", "1.0", "0.847", "1", "0.813", "1.0", "0.694",
            ],
            [
                "2", "2", "1.894", "3", "2.976", "1.5", "1.571", "2", "2.163", "1.0", "1.142",
            ],
            [
                "3", "3", "3.065", "7", "7.033", "2.333", "2.294", "5", "4.87", "1.667", "1.589",
            ],
            [
                "4", "5", "4.96", "15", "14.968", "3.0", "3.018", "10", "10.098", "2.0", "2.036",
            ],
            [
                "5", "8", "8.025", "30", "30.026", "3.75", "3.742", "20", "19.928", "2.5", "2.483",
            ],
            [
                "6", "13", "12.985", "58", "57.979", "4.462", "4.465", "38", "38.051", "2.923",
                "2.93",
            ],
            [
                "7", "21", "21.01", "109", "109.015", "5.19", "5.189", "71", "70.964", "3.381",
                "3.378",
            ],
            [
                "8", "34", "33.994", "201", "200.989", "5.912", "5.912", "130", "130.025", "3.824",
                "3.825",
            ],
            [
                "9", "55", "55.004", "365", "365.008", "6.636", "6.636", "235", "234.983", "4.273",
                "4.272",
            ],
            [
                "10", "89", "88.998", "655", "654.995", "7.36", "7.36", "420", "420.012", "4.719",
                "4.719",
            ],
            [
                "11", "144", "144.001", "1164", "1164.004", "8.083", "8.083", "744", "743.992",
                "5.167", "5.167",
            ],
            [
                "12", "233", "232.999", "2052", "2051.997", "8.807", "8.807", "1308", "1308.005",
                "5.614", "5.614",
            ],
            [
                "13", "377", "377.001", "3593", "3593.002", "9.531", "9.53", "2285", "2284.997",
                "6.061", "6.061",
            ],
            [
                "14", "610", "610.0", "6255", "6254.999", "10.254", "10.254", "3970", "3970.002",
                "6.508", "6.508",
            ],
            [
                "15",
                "987",
                "987.0",
                "10835",
                "10835.001",
                "10.978",
                "10.978",
                "6865",
                "6864.999",
                "6.955",
                "6.955",
            ],
        ],
    ),
    (
        3,
        &[
            [
                "0", "1", "0.618", "0", "0.132", "0.0", "0.213", "0", "0.2", "0.0", "0.323",
            ],
            [
                "1", "1", "1.137", "1", "0.946", "1.0", "0.832", "1", "0.75", "1.0", "0.66",
            ],
            [
                "2", "2", "2.092", "3", "3.034", "1.5", "1.45", "2", "2.083", "1.0", "0.996",
            ],
            [
                "3", "4", "3.848", "8", "7.96", "2.0", "2.069", "5", "5.126", "1.25", "1.332",
            ],
            [
                "4", "7", "7.078", "19", "19.017", "2.714", "2.687", "12", "11.808", "1.714",
                "1.668",
            ],
            [
                "5", "13", "13.018", "43", "43.028", "3.308", "3.305", "26", "26.095", "2.0",
                "2.005",
            ],
            [
                "6", "24", "23.943", "94", "93.948", "3.917", "3.924", "56", "56.046", "2.333",
                "2.341",
            ],
            [
                "7", "44", "44.038", "200", "200.032", "4.545", "4.542", "118", "117.891", "2.682",
                "2.677",
            ],
            [
                "8", "81", "80.999", "418", "418.008", "5.16", "5.161", "244", "244.07", "3.012",
                "3.013",
            ],
            [
                "9", "149", "148.98", "861", "860.968", "5.779", "5.779", "499", "499.007",
                "3.349", "3.349",
            ],
            [
                "10", "274", "274.017", "1753", "1753.025", "6.398", "6.397", "1010", "1009.948",
                "3.686", "3.686",
            ],
            [
                "11", "504", "503.996", "3536", "3535.998", "7.016", "7.016", "2027", "2027.043",
                "4.022", "4.022",
            ],
            [
                "12", "927", "926.994", "7077", "7076.985", "7.634", "7.634", "4040", "4039.994",
                "4.358", "4.358",
            ],
            [
                "13",
                "1705",
                "1705.007",
                "14071",
                "14071.015",
                "8.253",
                "8.253",
                "8004",
                "8003.979",
                "4.694",
                "4.694",
            ],
            [
                "14",
                "3136",
                "3135.997",
                "27820",
                "27819.995",
                "8.871",
                "8.871",
                "15776",
                "15776.023",
                "5.031",
                "5.031",
            ],
            [
                "15",
                "5768",
                "5767.998",
                "54736",
                "54735.994",
                "9.49",
                "9.49",
                "30956",
                "30955.993",
                "5.367",
                "5.367",
            ],
        ],
    ),
    (
        4,
        &[
            [
                "0", "1", "0.566", "0", "0.162", "0.0", "0.287", "0", "0.212", "0.0", "0.374",
            ],
            [
                "1", "1", "1.092", "1", "0.931", "1.0", "0.853", "1", "0.729", "1.0", "0.667",
            ],
            [
                "2", "2", "2.104", "3", "2.986", "1.5", "1.419", "2", "2.023", "1.0", "0.961",
            ],
            [
                "3", "4", "4.056", "8", "8.053", "2.0", "1.986", "5", "5.091", "1.25", "1.255",
            ],
            [
                "4", "8", "7.818", "20", "19.951", "2.5", "2.552", "12", "12.11", "1.5", "1.549",
            ],
            [
                "5", "15", "15.07", "47", "46.993", "3.133", "3.118", "28", "27.77", "1.867",
                "1.843",
            ],
            [
                "6", "29", "29.049", "107", "107.033", "3.69", "3.685", "62", "62.063", "2.138",
                "2.136",
            ],
            [
                "7", "56", "55.994", "238", "238.024", "4.25", "4.251", "136", "136.082", "2.429",
                "2.43",
            ],
            [
                "8", "108", "107.931", "520", "519.932", "4.815", "4.817", "294", "294.017",
                "2.722", "2.724",
            ],
            [
                "9", "208", "208.044", "1120", "1120.024", "5.385", "5.384", "628", "627.863",
                "3.019", "3.018",
            ],
            [
                "10", "401", "401.017", "2386", "2386.03", "5.95", "5.95", "1328", "1328.068",
                "3.312", "3.312",
            ],
            [
                "11", "773", "772.985", "5037", "5036.995", "6.516", "6.516", "2787", "2787.047",
                "3.605", "3.606",
            ],
            [
                "12",
                "1490",
                "1489.977",
                "10553",
                "10552.957",
                "7.083",
                "7.083",
                "5810",
                "5809.98",
                "3.899",
                "3.899",
            ],
            [
                "13",
                "2872",
                "2872.024",
                "21968",
                "21968.029",
                "7.649",
                "7.649",
                "12043",
                "12042.935",
                "4.193",
                "4.193",
            ],
            [
                "14",
                "5536",
                "5536.004",
                "45480",
                "45480.014",
                "8.215",
                "8.215",
                "24840",
                "24840.053",
                "4.487",
                "4.487",
            ],
            [
                "15",
                "10671",
                "10670.99",
                "93709",
                "93708.986",
                "8.782",
                "8.782",
                "51016",
                "51016.018",
                "4.781",
                "4.781",
            ],
        ],
    ),
];
