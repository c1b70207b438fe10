from setuptools import setup, find_packages

setup(
    name="scancarrier",
    version="1.0.0",
    description="Hybrid image encryption with SCAN-pattern permutations and keyword carrier images",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "numpy",
        "pydantic>=2",
    ],
    extras_require={
        "test": ["pytest<9"],
    },
    entry_points={
        "console_scripts": ["scancarrier=scancarrier.cli:main"],
    },
    classifiers=[
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3.11",
    ],
    python_requires=">=3.10",
)
