// Dividing the stake of an interrupted game, for two players and for three.

use cb_identity::exact::{int, rat};
use cb_identity::points::{
    chance_bernoulli, chance_montmort, enumeration_oracle, fair_division, multi_player_chances, GamePosition,
    MultiPosition,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pos = GamePosition::new(5, 3, rat(1, 2))?;
    let fixed = chance_bernoulli(&pos);
    let decisive = chance_montmort(&pos);
    let counted = enumeration_oracle(&pos)?;
    println!("Pierre needs 5, Paul 3: {} / {}", fixed.pierre, fixed.paul);
    println!("all routes agree: {}", fixed == decisive && decisive == counted);

    let shares = fair_division(&pos, &int(64))?;
    println!("a stake of 64 splits as {} and {}", shares.pierre, shares.paul);

    let three = MultiPosition::new(vec![1, 2, 2], vec![rat(1, 3); 3])?;
    let chances = multi_player_chances(&three);
    let text: Vec<String> = chances.iter().map(ToString::to_string).collect();
    println!("three players needing 1, 2, 2: {}", text.join(", "));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
