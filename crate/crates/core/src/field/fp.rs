use subtle::{ConstantTimeEq, CtOption};


use super::prime_field;

prime_field!(
    Fp, 6, 48, scalar_field: false,
    modulus: [
        0xb9fe_ffff_ffff_aaab,
        0x1eab_fffe_b153_ffff,
        0x6730_d2a0_f6b0_f624,
        0x6477_4b84_f385_12bf,
        0x4b1b_a7b6_434b_acd7,
        0x1a01_11ea_397f_e69a,
    ],
    r: [
        0x7609_0000_0002_fffd,
        0xebf4_000b_c40c_0002,
        0x5f48_9857_53c7_58ba,
        0x77ce_5853_7052_5745,
        0x5c07_1a97_a256_ec6d,
        0x15f6_5ec3_fa80_e493,
    ],
    r2: [
        0xf4df_1f34_1c34_1746,
        0x0a76_e6a6_09d1_04f1,
        0x8de5_476c_4c95_b6d5,
        0x67eb_88a9_939d_83c0,
        0x9a79_3e85_b519_952d,
        0x1198_8fe5_92ca_e3aa,
    ],
    inv: 0x89f3_fffc_fffc_fffd,
    ops: (FpMul, FpSqr, FpAdd, FpSub, FpInv)
);

impl Fp {
    /// Square root via `x^((p+1)/4)` (p = 3 mod 4).
    pub fn sqrt(&self) -> CtOption<Self> {
        let root = self.pow_vartime(&P_PLUS_1_DIV_4);
        CtOption::new(root, root.square().ct_eq(self))
    }

    /// `x^((p-3)/4)`, the core of the combined square-root-and-ratio map.
    pub(crate) fn pow_p_minus_3_div_4(&self) -> Self {
        self.pow_vartime(&P_MINUS_3_DIV_4)
    }
}

const P_PLUS_1_DIV_4: [u64; 6] = [
    0xee7f_bfff_ffff_eaab,
    0x07aa_ffff_ac54_ffff,
    0xd9cc_34a8_3dac_3d89,
    0xd91d_d2e1_3ce1_44af,
    0x92c6_e9ed_90d2_eb35,
    0x0680_447a_8e5f_f9a6,
];

const P_MINUS_3_DIV_4: [u64; 6] = [
    0xee7f_bfff_ffff_eaaa,
    0x07aa_ffff_ac54_ffff,
    0xd9cc_34a8_3dac_3d89,
    0xd91d_d2e1_3ce1_44af,
    0x92c6_e9ed_90d2_eb35,
    0x0680_447a_8e5f_f9a6,
];
