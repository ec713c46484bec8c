"""Chebyshev coefficients (argument z = 2p - 1, p in [0, 1]) of the
Riemann-Siegel correction terms C_0..C_4.  Generated by
tools/gen_rs_data.py; do not edit by hand."""

import numpy as np

RS_C0 = np.array([
    0.6426672862397683,
    -1.5135462327897642e-16,
    0.27197299999785535,
    4.336808689942018e-18,
    0.010738605819339997,
    -3.122502256758253e-17,
    -0.0013743815296334795,
    -1.5265566588595902e-16,
    -0.00012468221880342426,
    -3.469446951953614e-17,
    -5.764599706747919e-07,
    -2.0816681711721685e-17,
    2.7280674306032204e-07,
    5.204170427930421e-17,
    8.077952876051064e-09,
    1.6653345369377348e-16,
    -2.088462042193484e-10,
    -5.551115123125783e-17,
    -1.3115605823621479e-11,
    -1.734723475976807e-16,
    -1.3922890618189854e-14,
    -1.0408340855860843e-16,
    1.0451708942760263e-14,
    -5.204170427930421e-17,
    1.8735013540549517e-16,
    -4.163336342344337e-17,
    1.3010426069826053e-17,
    4.2500725161431774e-17,
    -3.469446951953614e-18,
    1.452830911130576e-16,
    -5.898059818321144e-17,
    -1.491862189340054e-16,
    -2.411265631607762e-16,
    -1.1102230246251565e-16,
    -4.85722573273506e-17,
    1.196959198423997e-16,
    2.3505503099485736e-16,
    -5.898059818321144e-17,
    3.469446951953614e-17,
    2.7755575615628914e-17,
    3.122502256758253e-17,
    -6.591949208711867e-17,
    1.734723475976807e-17,
    -1.6653345369377348e-16,
    -2.1510571102112408e-16,
    1.1275702593849246e-16,
    -2.5326962749261384e-16,
    -1.214306433183765e-16,
    7.632783294297951e-17,
    -7.632783294297951e-17,
    -1.214306433183765e-16,
    7.979727989493313e-17,
    -6.765421556309548e-17,
    -2.463307335887066e-16,
    -2.0816681711721685e-16,
    3.3566899260151217e-16,
])

RS_C1 = np.array([
    -1.237808020218685e-19,
    0.010697913922431591,
    -9.540979117872439e-18,
    0.017170651243766977,
    -9.540979117872439e-18,
    0.0027932111497469456,
    -8.239936510889834e-18,
    -3.637565373634105e-05,
    -1.734723475976807e-18,
    -2.710895523192272e-05,
    -2.710505431213761e-19,
    -1.048374986593447e-06,
    -1.4094628242311558e-18,
    5.886467165875514e-08,
    7.589415207398531e-18,
    4.322967255433047e-09,
    -2.168404344971009e-19,
    -1.1369596019869532e-11,
    4.336808689942018e-18,
    -6.699828625916782e-12,
    -1.0842021724855044e-17,
    -1.0079654125250137e-13,
    -6.071532165918825e-18,
    5.166319066616468e-15,
    -1.4203048459560108e-17,
    1.7520707107365752e-16,
    -4.119968255444917e-18,
    7.806255641895632e-18,
    8.890457814381136e-18,
    -8.673617379884035e-19,
    1.474514954580286e-17,
    8.673617379884035e-19,
    1.0408340855860843e-17,
    -3.2526065174565133e-18,
    8.890457814381136e-18,
    1.951563910473908e-18,
    5.637851296924623e-18,
    6.613633252161577e-18,
    -5.10930273783794e-18,
    1.5395670849294163e-17,
    -2.168404344971009e-18,
    1.951563910473908e-17,
    1.3010426069826053e-18,
    1.691355389077387e-17,
    3.144186300207963e-18,
    -2.168404344971009e-19,
    1.0842021724855044e-18,
    1.3010426069826053e-17,
    -1.8648277366750676e-17,
    1.214306433183765e-17,
    -8.673617379884035e-19,
    -6.938893903907228e-18,
    -6.071532165918825e-18,
    8.673617379884035e-19,
    1.8431436932253575e-17,
    -9.540979117872439e-18,
    1.0408340855860843e-17,
])

RS_C2 = np.array([
    0.003146115854280698,
    5.421010862427522e-20,
    -0.0023087838839562255,
    2.1006417091906648e-19,
    5.769820791496944e-05,
    1.3213713977167085e-19,
    0.0003523886202466465,
    1.6263032587282567e-19,
    2.5246667451394537e-05,
    -5.963111948670274e-19,
    -3.4428211979499034e-06,
    3.7947076036992655e-19,
    -3.5350745564038965e-07,
    -9.486769009248164e-19,
    3.730830190303621e-09,
    -5.421010862427522e-19,
    1.2776951871735012e-09,
    2.168404344971009e-19,
    2.1874616105022754e-11,
    1.6263032587282567e-18,
    -1.914142184599593e-12,
    1.3552527156068805e-18,
    -6.562771972997566e-14,
    4.0657581468206416e-19,
    1.2588942475272313e-15,
    -3.2526065174565133e-19,
    8.170818622393883e-17,
])

RS_C3 = np.array([
    5.0715740150727356e-21,
    7.123256221807284e-05,
    -1.2197274440461925e-19,
    0.00023234305305370144,
    -5.955700410381799e-20,
    -0.00012929912038138605,
    -2.0328790734103208e-20,
    1.8074496425672935e-05,
    -9.486769009248164e-20,
    6.526185185819958e-06,
    2.0328790734103208e-20,
    -1.169636541285944e-07,
    -2.795208725939191e-20,
    -7.349476126966413e-08,
    8.470329472543003e-20,
    -1.7750910058234444e-09,
    4.743384504624082e-20,
    2.555552962917539e-10,
    -3.3881317890172014e-21,
    1.1376636639042273e-11,
    -7.453889935837843e-20,
    -3.34986351808661e-13,
    -3.049318610115481e-20,
    -2.5537299664789466e-14,
    -8.480917384383682e-20,
    6.794559489695096e-17,
    6.098637220230962e-20,
    2.986976985197565e-17,
])

RS_C4 = np.array([
    8.231593580700513e-05,
    1.283254915090265e-19,
    -0.0006064353096129799,
    4.743384504624082e-20,
    -0.00042243225685800745,
    0.0,
    -5.140982823541502e-05,
    5.014435047745458e-19,
    1.4822020160299402e-05,
    -6.098637220230962e-20,
    2.99112906898205e-06,
    -1.7618285302889447e-19,
    6.963771514749623e-09,
    -2.22769665127881e-19,
    -2.5516268203819997e-08,
    -2.168404344971009e-19,
    -1.050580063110902e-09,
    1.3552527156068805e-19,
    7.011763909835038e-11,
    5.277015261394291e-19,
    4.943091922381907e-12,
    2.574980159653073e-19,
    -5.3481274042612575e-14,
    2.507217523872729e-19,
    -9.903116196009754e-15,
    8.131516293641283e-20,
    -8.142400667013501e-17,
    -1.4060746924421386e-19,
    1.0245710529988017e-17,
])

RS_CORRECTIONS = (RS_C0, RS_C1, RS_C2, RS_C3, RS_C4)
