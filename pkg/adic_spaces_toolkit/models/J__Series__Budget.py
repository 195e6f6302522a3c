from osbot_utils.type_safe.Type_Safe                    import Type_Safe
from adic_spaces_toolkit.utils.Toolkit__Errors          import Step_Budget__Exhausted


class J__Series__Budget(Type_Safe):                                              # steps spent by one j-series call
    limit : int
    steps : int = 0

    def spend(self, count: int):
        self.steps += count
        if self.steps > self.limit:
            raise Step_Budget__Exhausted(f"j-series computation exceeded the step budget of {self.limit}")
