use super::MonomialIdeal;

impl MonomialIdeal {
    /// `I : m = (I : x_1) ∩ ... ∩ (I : x_n)`.
    pub fn colon_maximal(&self) -> MonomialIdeal {
        (1..self.n())
            .fold(self.colon_var(0), |acc, i| acc.intersect(&self.colon_var(i)).expect("same ambient"))
    }

    /// `I^sat`, the stable value of repeated colon by the maximal ideal.
    pub fn saturate(&self) -> MonomialIdeal {
        let mut current = self.clone();
        loop {
            let next = current.colon_maximal();
            if next == current {
                return current;
            }
            current = next;
        }
    }

    pub fn is_saturated(&self) -> bool {
        self.colon_maximal() == *self
    }
}
