from setuptools import setup, find_packages


setup(
    name='convexpoly',
    version='0.1.0',
    description='Exact convexity tests for x-sorted point sequences and real sequences',
    license='MIT',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
    ],

    packages=find_packages(exclude=['tests', 'examples']),
    python_requires='>=3.7',

    install_requires=[
        'numpy',
        'scipy',
        'matplotlib',
        'colorlog',
        'tqdm',
    ],
    extras_require={
        'tests': [
            'pytest',
            'hypothesis',
        ],
    },
    entry_points={
        'console_scripts': [
            'convexpoly = convexpoly.cli:main',
        ],
    },
)
