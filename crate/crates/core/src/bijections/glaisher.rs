use crate::bijections::require;
use crate::error::Result;
use crate::{Partition, PartitionClass};

/// Glaisher's map: the part `2^i·j` occurs in the image iff `2^i` occurs in
/// the binary expansion of the multiplicity of `j`.
pub fn glaisher_forward(lambda: &Partition) -> Result<Partition> {
    require(lambda, PartitionClass::Odd)?;
    let mut parts = Vec::new();
    for (value, mult) in lambda.multiplicities() {
        let mut bits = mult as u64;
        let mut scale = 1u64;
        while bits != 0 {
            if bits & 1 == 1 {
                parts.push(value * scale);
            }
            bits >>= 1;
            scale <<= 1;
        }
    }
    Partition::new(parts)
}

/// Splits each part as `2^i·j` with `j` odd and emits `2^i` copies of `j`.
pub fn glaisher_inverse(nu: &Partition) -> Result<Partition> {
    require(nu, PartitionClass::Distinct)?;
    let mut parts = Vec::new();
    for &p in nu.parts() {
        let shift = p.trailing_zeros();
        let odd = p >> shift;
        parts.extend(std::iter::repeat_n(odd, 1usize << shift));
    }
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn binary_expansion_example() {
        let lam = Partition::from_multiplicities(&[(7, 13), (5, 3), (3, 2), (1, 5)]).unwrap();
        let nu = p(&[56, 28, 10, 7, 6, 5, 4, 1]);
        assert_eq!(glaisher_forward(&lam).unwrap(), nu);
        assert_eq!(glaisher_inverse(&nu).unwrap(), lam);
    }

    #[test]
    fn small_cases() {
        assert_eq!(glaisher_forward(&p(&[1])).unwrap(), p(&[1]));
        assert_eq!(glaisher_forward(&p(&[3, 3])).unwrap(), p(&[6]));
        assert_eq!(glaisher_inverse(&p(&[6])).unwrap(), p(&[3, 3]));
        assert_eq!(glaisher_inverse(&p(&[1])).unwrap(), p(&[1]));
    }

    #[test]
    fn rejects_out_of_domain() {
        assert!(matches!(
            glaisher_forward(&p(&[2])),
            Err(Error::NotInClass {
                class: PartitionClass::Odd,
                ..
            })
        ));
        assert!(matches!(
            glaisher_inverse(&p(&[3, 3])),
            Err(Error::NotInClass {
                class: PartitionClass::Distinct,
                ..
            })
        ));
    }
}
