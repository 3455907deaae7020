from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="SHIFTED_BALANCED_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Enumeration caps
    max_syt_size: int = Field(default=12, ge=1)
    max_bs_size: int = Field(default=9, ge=1)
    max_word_length: int = Field(default=16, ge=0)

    # SHIFTED_BALANCED_MAX: one number that overrides every cap above
    max: int | None = Field(default=None, ge=0)

    # Worker threads for `verify`
    verify_workers: int = Field(default=4, ge=1)

    # Debug logging
    debug: bool = False

    @property
    def syt_cap(self) -> int:
        return self.max if self.max is not None else self.max_syt_size

    @property
    def bs_cap(self) -> int:
        return self.max if self.max is not None else self.max_bs_size

    @property
    def word_cap(self) -> int:
        return self.max if self.max is not None else self.max_word_length


settings = Settings()
