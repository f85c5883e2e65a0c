use bgmu_core::{Error, FrobeniusDescriptor, GroupDatum, Problem, Result};
use serde_json::{json, Value};

/// A problem as given on the command line.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProblemSpec {
    pub group: String,
    pub mu: Vec<i64>,
    pub sigma: String,
    pub normalize: bool,
}

pub fn parse_mu(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|x| {
            x.trim().parse().map_err(|_| Error::Parse {
                text: text.to_string(),
                reason: format!("`{}` is not an integer", x.trim()),
            })
        })
        .collect()
}

pub fn parse_twist(
    datum: &GroupDatum,
    sigma: &str,
    normalize: bool,
) -> Result<FrobeniusDescriptor> {
    let f = FrobeniusDescriptor::parse(datum, sigma)?;
    Ok(if normalize { f.normalized() } else { f })
}

impl ProblemSpec {
    pub fn datum(&self) -> Result<GroupDatum> {
        self.group.parse()
    }

    pub fn frob(&self) -> Result<FrobeniusDescriptor> {
        parse_twist(&self.datum()?, &self.sigma, self.normalize)
    }

    pub fn problem(&self) -> Result<Problem> {
        Problem::new(self.mu.clone(), self.frob()?)
    }

    pub fn rank(&self) -> usize {
        self.mu.len()
    }

    /// Shell command replaying this problem with `subcommand`.
    pub fn command_line(&self, subcommand: &str) -> String {
        let mu: Vec<String> = self.mu.iter().map(|x| x.to_string()).collect();
        let mut s = format!(
            "bgmu {subcommand} --group {} --mu {} --sigma '{}'",
            self.group,
            mu.join(","),
            self.sigma
        );
        if self.normalize {
            s.push_str(" --normalize");
        }
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group,
            "mu": self.mu,
            "sigma": self.sigma,
            "normalize": self.normalize,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let s = ProblemSpec {
            group: "gl:2*2".into(),
            mu: vec![1, 0, -1, 0],
            sigma: "sigma0=2,1".into(),
            normalize: true,
        };
        let p = s.problem().unwrap_err();
        assert!(matches!(p, Error::NotDominant(_)));
        assert_eq!(parse_mu(" 1, 0,-1 ,0").unwrap(), vec![1, 0, -1, 0]);
        assert!(parse_mu("1,,0").is_err());
        assert_eq!(
            s.command_line("max"),
            "bgmu max --group gl:2*2 --mu 1,0,-1,0 --sigma 'sigma0=2,1' --normalize"
        );
    }
}
