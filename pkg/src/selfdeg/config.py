"""
Handles the configuration of the calculator and its command line.
"""

from selfdeg.types.config_types import CalculatorConfig


class Config:
    """
    Allows for shared configuration across the application.
    Parameters are determined by the CalculatorConfig model in config_types.py
    """

    configured = False
    with_zero = False
    json_output = False
    quiet = False
    max_enumeration_width = 10_000_000
    log_level = CalculatorConfig().log_level
    log_directory = None

    @classmethod
    def load(cls, settings: CalculatorConfig) -> None:
        """Copies every field of `settings`, extras included, onto the shared config"""
        for name, value in settings.model_dump(mode="python").items():
            setattr(cls, name, value)
        cls.configured = True

    @classmethod
    def reset(cls) -> None:
        """Restores the defaults"""
        cls.load(CalculatorConfig())
        cls.configured = False
